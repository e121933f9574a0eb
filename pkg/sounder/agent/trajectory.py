# sounder - iterative search agents and their RL training harness
# Copyright (C) 2026 The sounder authors
#
# This library is free software; you can redistribute it and/or
# modify it under the terms of the GNU Library General Public
# License as published by the Free Software Foundation; either
# version 2 of the License, or (at your option) any later version.
#
# This library is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Library General Public License for more details.
#
# You should have received a copy of the GNU Library General Public
# License along with this library; if not, write to the
# Free Software Foundation, Inc., 59 Temple Place - Suite 330,
# Boston, MA 02111-1307, USA.

from dataclasses import dataclass

from sounder.agent.action import Search, Answer, action_from_dict
from sounder.enums import Provenance, TerminatedBy
from sounder.errors import DataValidationError
from sounder.search import Document
from sounder.utils import _


@dataclass(frozen=True)
class Span:
    text: str
    provenance: str


@dataclass(frozen=True)
class Round:
    '''
    One reasoning step of an episode

    @ivar index: 1-based round number
    @ivar documents: documents retrieved by a search action, merged across
                     queries in query order
    '''
    index: int
    reasoning: str
    action: object
    documents: tuple = ()

    def __post_init__(self):
        if self.index < 1:
            raise ValueError('round index must be >= 1')
        object.__setattr__(self, 'documents', tuple(self.documents))
        if isinstance(self.action, Answer) and self.documents:
            raise ValueError('answer rounds carry no documents')

    def to_dict(self):
        return {'index': self.index, 'reasoning': self.reasoning,
                'action': self.action.to_dict(),
                'documents': [d.to_dict() for d in self.documents]}

    @classmethod
    def from_dict(cls, d):
        return cls(d['index'], d['reasoning'], action_from_dict(d['action']),
                   [Document.from_dict(x) for x in d.get('documents', [])])


@dataclass(frozen=True)
class History:
    question: str
    rounds: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'rounds', tuple(self.rounds))
        for i, r in enumerate(self.rounds):
            if r.index != i + 1:
                raise ValueError('history rounds must be numbered 1..n')

    def document_count(self):
        return sum(len(r.documents) for r in self.rounds)


@dataclass(frozen=True)
class Trajectory:
    '''
    A complete rollout. Immutable once built, so it can be shared freely
    between workers.
    '''
    record_id: str
    question: str
    rounds: tuple
    final_answer: str
    terminated_by: str
    token_spans: tuple
    attempt: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'rounds', tuple(self.rounds))
        object.__setattr__(self, 'token_spans', tuple(self.token_spans))
        if (self.terminated_by == TerminatedBy.ANSWERED) != \
                (self.final_answer is not None):
            raise ValueError('a final answer is present iff the episode '
                             'ended with an answer')

    @property
    def used_search(self):
        return any(isinstance(r.action, Search) for r in self.rounds)

    def search_rounds(self):
        return sum(1 for r in self.rounds if isinstance(r.action, Search))

    def search_queries(self):
        return sum(len(r.action.queries) for r in self.rounds
                   if isinstance(r.action, Search))

    def transcript(self):
        return ''.join(s.text for s in self.token_spans)

    def reasoning_chain(self):
        ''' Reasoning of every round joined in order, as shown to graders '''
        return '\n'.join('[%d] %s' % (r.index, r.reasoning)
                         for r in self.rounds)

    def to_dict(self):
        return {'record_id': self.record_id,
                'attempt': self.attempt,
                'question': self.question,
                'rounds': [r.to_dict() for r in self.rounds],
                'final_answer': self.final_answer,
                'terminated_by': self.terminated_by,
                'used_search': self.used_search,
                'token_spans': [[s.text, s.provenance]
                                for s in self.token_spans]}

    @classmethod
    def from_dict(cls, d, path=None):
        try:
            spans = [Span(text, prov) for text, prov in d['token_spans']]
            for s in spans:
                if s.provenance not in Provenance.all():
                    raise ValueError('unknown provenance %r' % s.provenance)
            if d['terminated_by'] not in TerminatedBy.all():
                raise ValueError('unknown termination %r' % d['terminated_by'])
            return cls(d['record_id'], d.get('question', ''),
                       [Round.from_dict(r) for r in d['rounds']],
                       d.get('final_answer'), d['terminated_by'], spans,
                       d.get('attempt', 0))
        except (KeyError, TypeError, ValueError) as e:
            raise DataValidationError(_('invalid trajectory: %s') % e, path)
