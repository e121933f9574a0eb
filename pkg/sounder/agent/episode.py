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

from sounder import search as search_env
from sounder.agent.action import Answer, parse_turn
from sounder.agent.prompt import render_system_prompt, render_document_spans, \
    ROLE_HEADER_TPL, TURN_END, REJECT_SEARCH_MSG
from sounder.agent.trajectory import Span, Round, Trajectory
from sounder.enums import Provenance, TerminatedBy
from sounder.errors import BackendError, ParseFailure, ConfigurationError
from sounder.utils import _, run_in_pool
from sounder.utils import messages as m


@dataclass(frozen=True)
class AgentConfig:
    '''
    Settings of the reasoning and retrieval loop

    @ivar max_rounds: rounds allowed before the episode is cut
    @ivar truncate_queries: drop queries over the limit instead of failing
                            the turn
    @ivar allow_search: when False the search-free prompt is used and
                        search actions are rejected
    '''
    max_rounds: int = 7
    max_queries_per_round: int = 5
    top_k_per_query: int = 2
    sampling_temperature: float = 0.9
    truncate_queries: bool = True
    allow_search: bool = True
    max_doc_chars: int = 2000

    def __post_init__(self):
        if self.max_rounds < 1:
            raise ConfigurationError(_('max_rounds must be at least 1'))
        if not 1 <= self.max_queries_per_round <= search_env.MAX_QUERIES:
            raise ConfigurationError(_('max_queries_per_round must be in '
                                       '[1, %d]') % search_env.MAX_QUERIES)
        if self.top_k_per_query < 1:
            raise ConfigurationError(_('top_k_per_query must be at least 1'))
        if self.sampling_temperature < 0:
            raise ConfigurationError(_('sampling_temperature must be >= 0'))

    @classmethod
    def from_config(cls, config, **overrides):
        values = dict(max_rounds=config.max_rounds,
                      max_queries_per_round=config.max_queries_per_round,
                      top_k_per_query=config.top_k_per_query,
                      sampling_temperature=config.sampling_temperature,
                      truncate_queries=config.truncate_queries,
                      max_doc_chars=config.max_doc_chars)
        values.update(overrides)
        return cls(**values)


def merge_results(results):
    ''' Concatenates per-query lists in query order, first URL wins '''
    seen = set()
    merged = []
    for docs in results:
        for doc in docs:
            if doc.url in seen:
                continue
            seen.add(doc.url)
            merged.append(doc)
    return merged


class _Transcript:

    def __init__(self):
        self.messages = []
        self.spans = []

    def add(self, role, spans):
        self.messages.append((role, ''.join(s.text for s in spans)))
        self.spans.append(Span(ROLE_HEADER_TPL % role, Provenance.PROMPT))
        self.spans.extend(spans)
        self.spans.append(Span(TURN_END, Provenance.PROMPT))


def run_episode(record, model, search, config, attempt=0, data_dir=None):
    '''
    Runs the reasoning and retrieval loop for one question until the model
    answers, a turn fails or the round budget is spent.

    @param record: the question
    @type record: L{sounder.dataset.QARecord}
    @param model: policy backend
    @type model: L{sounder.backends.ModelBackend}
    @param search: search backend
    @type search: L{sounder.search.SearchBackend}
    @type config: L{AgentConfig}
    @param attempt: attempt number, part of the key scripted backends replay
    @type attempt: int
    @rtype: L{sounder.agent.trajectory.Trajectory}
    '''
    key = (record.id, attempt)
    transcript = _Transcript()
    system = render_system_prompt(record.question, config.allow_search,
                                  data_dir)
    transcript.add('system', [Span(system, Provenance.PROMPT)])
    rounds = []
    final_answer = None
    terminated_by = None
    rejected = False

    while len(rounds) < config.max_rounds:
        try:
            raw = model.complete(list(transcript.messages), key=key)
        except BackendError as e:
            m.warning(_('%s attempt %d: %s') % (record.id, attempt, e))
            terminated_by = TerminatedBy.BACKEND_ERROR
            break
        transcript.add('assistant', [Span(raw, Provenance.MODEL)])
        try:
            reasoning, action = parse_turn(raw, config)
        except ParseFailure as e:
            m.action(_('%s attempt %d: %s') % (record.id, attempt, e))
            terminated_by = TerminatedBy.PARSE_FAILURE
            break

        index = len(rounds) + 1
        if isinstance(action, Answer):
            rounds.append(Round(index, reasoning, action))
            final_answer = action.text
            terminated_by = TerminatedBy.ANSWERED
            break

        if not config.allow_search:
            if rejected:
                terminated_by = TerminatedBy.SEARCH_REJECTED
                break
            rejected = True
            transcript.add('user', [Span(REJECT_SEARCH_MSG,
                                         Provenance.PROMPT)])
            continue

        try:
            results = search_env.search(action.queries,
                                        config.top_k_per_query, search)
        except BackendError as e:
            m.warning(_('%s attempt %d: %s') % (record.id, attempt, e))
            terminated_by = TerminatedBy.BACKEND_ERROR
            break
        offset = sum(len(r.documents) for r in rounds)
        documents = merge_results(results)
        rounds.append(Round(index, reasoning, action, documents))
        if len(rounds) >= config.max_rounds:
            break
        transcript.add('user', render_document_spans(documents, offset))

    if terminated_by is None:
        terminated_by = TerminatedBy.ROUND_CAP
    return Trajectory(record.id, record.question, rounds, final_answer,
                      terminated_by, transcript.spans, attempt)


def run_episodes(jobs, model, search, config, workers=1, data_dir=None):
    '''
    Runs many independent episodes on a worker pool

    @param jobs: (record, attempt) pairs
    @type jobs: list
    @return: trajectories in the order of C{jobs}
    @rtype: list
    '''
    jobs = list(jobs)

    def _job(record, attempt):
        return lambda: run_episode(record, model, search, config, attempt,
                                   data_dir)
    return run_in_pool([_job(r, a) for r, a in jobs], workers)
