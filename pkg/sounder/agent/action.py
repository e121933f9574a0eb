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

import re
import ast
import json
from dataclasses import dataclass, field

from sounder.errors import ParseFailure, QueryLimitExceeded
from sounder.utils import _
from sounder.utils import messages as m


OPEN_TAG = '<thinking>'
CLOSE_TAG = '</thinking>'
TOOL_NAME = 'web_search'
TURN_TPL = OPEN_TAG + '%s' + CLOSE_TAG + '%s'

_tool_call_re = re.compile(r'%s\s*\|' % TOOL_NAME)


@dataclass(frozen=True)
class Search:
    '''
    Search action

    @ivar queries: the queries, in the order the model wrote them
    @ivar truncated: the model supplied more queries than allowed and the
                     extra ones were dropped
    '''
    queries: tuple
    truncated: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'queries', tuple(self.queries))

    def to_dict(self):
        return {'type': 'search', 'queries': list(self.queries),
                'truncated': self.truncated}


@dataclass(frozen=True)
class Answer:
    text: str

    def to_dict(self):
        return {'type': 'answer', 'text': self.text}


def action_from_dict(d):
    if d['type'] == 'search':
        return Search(d['queries'], d.get('truncated', False))
    if d['type'] == 'answer':
        return Answer(d['text'])
    raise ValueError('unknown action type %r' % d['type'])


def serialize_action(action):
    '''
    Render an action in the wire format the model is instructed to use

    @type action: L{Search} or L{Answer}
    @rtype: str
    '''
    if isinstance(action, Search):
        return '%s|%r' % (TOOL_NAME, {'search_queries': list(action.queries)})
    return action.text


def format_turn(reasoning, action):
    ''' Builds a complete model turn from its reasoning and action '''
    return TURN_TPL % (reasoning, serialize_action(action))


def _parse_payload(payload):
    start = payload.find('{')
    end = payload.rfind('}')
    if start == -1 or end < start:
        raise ParseFailure(_('tool call without a query dictionary'))
    payload = payload[start:end + 1]
    try:
        value = ast.literal_eval(payload)
    except (ValueError, SyntaxError):
        try:
            value = json.loads(payload)
        except ValueError:
            raise ParseFailure(_('malformed tool call payload: %r') % payload)
    if not isinstance(value, dict) or 'search_queries' not in value:
        raise ParseFailure(_("tool call payload lacks 'search_queries'"))
    queries = value['search_queries']
    if not isinstance(queries, (list, tuple)) or len(queries) == 0:
        raise ParseFailure(_('empty or malformed query list'))
    for q in queries:
        if not isinstance(q, str) or not q.strip():
            raise ParseFailure(_('invalid search query %r') % (q,))
    return list(queries)


def parse_turn(raw_model_text, config):
    '''
    Splits a model turn into its reasoning and its action.

    The reasoning is wrapped in a single pair of thinking tags. What follows
    the closing tag is a tool call when it contains C{web_search|}, and the
    final answer otherwise.

    @param raw_model_text: the complete model turn
    @type raw_model_text: str
    @param config: agent configuration
    @type config: L{sounder.agent.episode.AgentConfig}
    @return: the reasoning and the action
    @rtype: tuple
    @raises ParseFailure: missing or unbalanced tags, malformed tool call or
                          empty answer
    '''
    if raw_model_text.count(OPEN_TAG) != 1 or \
            raw_model_text.count(CLOSE_TAG) != 1:
        raise ParseFailure(_('thinking tags are missing or unbalanced'))
    start = raw_model_text.index(OPEN_TAG)
    end = raw_model_text.index(CLOSE_TAG)
    if end < start:
        raise ParseFailure(_('closing thinking tag before the opening one'))
    reasoning = raw_model_text[start + len(OPEN_TAG):end].strip()
    trailing = raw_model_text[end + len(CLOSE_TAG):].strip()

    match = _tool_call_re.search(trailing)
    if match is None:
        if not trailing:
            raise ParseFailure(_('empty answer'))
        return reasoning, Answer(trailing)

    queries = _parse_payload(trailing[match.end():])
    limit = config.max_queries_per_round
    if len(queries) > limit:
        if not config.truncate_queries:
            raise QueryLimitExceeded(len(queries), limit)
        m.warning(_('%d search queries supplied, keeping the first %d') %
                  (len(queries), limit))
        return reasoning, Search(queries[:limit], truncated=True)
    return reasoning, Search(queries)
