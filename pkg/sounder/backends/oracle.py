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

import json
import re

from sounder.backends import ModelBackend
from sounder.enums import BackendKind, GraderMode

ALIAS_PREFIX = 'alias:'
LOOSE_FIELD = '得分'
STRICT_FIELD = '回复正确性'
CORRECT = '正确'
WRONG = '错误'

_token_re = re.compile(r"[^\W_]+")


def normalize(text):
    ''' Case-folds and drops everything but letters and digits '''
    return ''.join(c for c in text.casefold() if c.isalnum())


def tokens(text):
    return _token_re.findall(text.casefold())


def accepted_answers(record):
    ''' The reference answer plus every alias listed in the checklist '''
    answers = [record.solution]
    for item in record.checklist:
        if item.strip().lower().startswith(ALIAS_PREFIX):
            answers.append(item.strip()[len(ALIAS_PREFIX):])
    return [a for a in answers if normalize(a)]


def contains_tokens(words, needle):
    n = len(needle)
    return any(words[i:i + n] == needle for i in range(len(words) - n + 1))


def matches(record, answer, relaxed=False):
    '''
    Whether C{answer} is one of the accepted answers. Relaxed matching also
    accepts an answer holding an accepted one as a run of whole words, so
    I{answer_1} is not found in I{answer_10}.
    '''
    response = normalize(answer or '')
    if not response:
        return False
    words = tokens(answer)
    for accepted in accepted_answers(record):
        if response == normalize(accepted):
            return True
        if relaxed and contains_tokens(words, tokens(accepted)):
            return True
    return False


class OracleJudgeBackend(ModelBackend):
    '''
    Deterministic judge comparing the answer with the reference.

    Verdicts are written in the same formats hosted judges use, so they go
    through the regular verdict parsing. With C{relaxed} an answer only has
    to contain an accepted answer, which makes it a lenient stand-in for the
    loose grader.
    '''

    kind = BackendKind.ORACLE

    def __init__(self, relaxed=False, max_concurrent=64):
        ModelBackend.__init__(self, 'oracle', 0.0, max_concurrent)
        self.relaxed = relaxed

    def complete(self, messages, key=None):
        raise NotImplementedError('the oracle only judges')

    def judge(self, prompt, key=None, context=None):
        if context is None:
            return '<count>0</count>'
        correct = matches(context['record'], context['answer'], self.relaxed)
        if context['mode'] == GraderMode.LOOSE:
            return json.dumps({LOOSE_FIELD: 10 if correct else 1},
                              ensure_ascii=False)
        return json.dumps({STRICT_FIELD: CORRECT if correct else WRONG},
                          ensure_ascii=False)
