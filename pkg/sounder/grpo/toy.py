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
from dataclasses import dataclass

from sounder.agent.action import Search, Answer, format_turn
from sounder.backends import ModelBackend
from sounder.dataset import QARecord
from sounder.enums import Category, DocumentSource, SearchKind
from sounder.errors import ConfigurationError
from sounder.search import Document, SearchBackend
from sounder.utils import _, seeded_rng

PROMPT_STATE = 0
OBSERVATION_STATE = 1
OPAQUE_STATE = 2
SEARCH_ACTION = 0

ANSWER_TPL = 'answer_%d'
QUERY_TPL = 'toy task %d'
_answer_re = re.compile(r'answer_(\d+)')
_task_re = re.compile(r'(\d+)$')


@dataclass(frozen=True)
class ToyTask:
    answer: int
    answerable: bool


@dataclass(frozen=True)
class ToySeekEnv:
    '''
    Tiny information seeking environment.

    Every task has a hidden answer among C{answer_1..answer_m}. Tasks
    answerable without search have a start state of their own, so a tabular
    policy can memorize their answer. The others share one opaque start
    state and can only be solved reliably by searching, which reveals the
    answer and moves the policy to the informed state of that answer.

    States: 0 prompt tokens, 1 retrieved tokens, 2 opaque start,
    3..2+m informed, then one start state per answerable task.
    Actions: 0 search, k answer_k.
    '''
    tasks: tuple
    n_answers: int

    def __post_init__(self):
        object.__setattr__(self, 'tasks', tuple(self.tasks))
        if self.n_answers < 1:
            raise ConfigurationError(_('the toy environment needs answers'))
        for t in self.tasks:
            if not 1 <= t.answer <= self.n_answers:
                raise ConfigurationError(_('toy answer out of range'))

    @classmethod
    def generate(cls, n_tasks, n_answers=3, unanswerable_ratio=0.8, seed=0):
        '''
        Unanswerable tasks get their answers round-robin, so guessing in the
        opaque state can not beat 1/m.
        '''
        if not 0.0 <= unanswerable_ratio <= 1.0:
            raise ConfigurationError(_('unanswerable_ratio must be in [0, 1]'))
        rng = seeded_rng(seed, 'toy-env')
        n_hidden = int(round(unanswerable_ratio * n_tasks))
        hidden = set(int(i) for i in
                     rng.permutation(n_tasks)[:n_hidden])
        tasks = []
        j = 0
        for t in range(n_tasks):
            if t in hidden:
                tasks.append(ToyTask(j % n_answers + 1, False))
                j += 1
            else:
                tasks.append(ToyTask(int(rng.integers(1, n_answers + 1)),
                                     True))
        return cls(tasks, n_answers)

    @property
    def n_states(self):
        return 3 + self.n_answers + len(self.tasks)

    @property
    def n_actions(self):
        return self.n_answers + 1

    def informed_state(self, answer):
        return 2 + answer

    def start_state(self, task):
        if not self.tasks[task].answerable:
            return OPAQUE_STATE
        return 3 + self.n_answers + task

    def unanswerable_ratio(self):
        if not self.tasks:
            return 0.0
        return sum(1 for t in self.tasks if not t.answerable) / len(self.tasks)

    def record(self, task):
        return QARecord('toy-%d' % task, QUERY_TPL % task,
                        ANSWER_TPL % self.tasks[task].answer, (),
                        Category.OTHER, None, 'en')

    def records(self):
        return [self.record(t) for t in range(len(self.tasks))]

    @staticmethod
    def task_of(record_id):
        return int(_task_re.search(record_id).group(1))

    def turn_state(self, task, revealed):
        ''' State of a model turn given the last revealed answer, if any '''
        if revealed is None:
            return self.start_state(task)
        return self.informed_state(revealed)

    @staticmethod
    def revealed_answer(text):
        found = _answer_re.findall(text)
        return int(found[-1]) if found else None

    @staticmethod
    def action_of(action):
        if isinstance(action, Search):
            return SEARCH_ACTION
        answer = ToySeekEnv.revealed_answer(action.text)
        if answer is None:
            raise ValueError('not a toy answer: %r' % action.text)
        return answer


class ToySearchBackend(SearchBackend):
    ''' Searching for a task returns one document holding its answer '''

    kind = SearchKind.SIMULATED

    def __init__(self, env):
        self.env = env

    def search(self, queries, k):
        results = []
        for q in queries:
            match = _task_re.search(q)
            if match is None or int(match.group(1)) >= len(self.env.tasks):
                results.append([])
                continue
            t = int(match.group(1))
            results.append([Document('toy://%d' % t, QUERY_TPL % t,
                                     ANSWER_TPL % self.env.tasks[t].answer,
                                     1, DocumentSource.SIMULATED)])
        return results


class ToyPolicyBackend(ModelBackend):
    '''
    Serves turns sampled from a L{sounder.grpo.objective.ToyPolicy}, so toy
    rollouts go through the regular agent loop.

    Sampling is seeded from (seed, step, task, attempt, round), which makes
    rollouts independent of the order episodes are scheduled in.
    '''

    def __init__(self, env, policy, seed=0, step=0):
        ModelBackend.__init__(self, 'toy', 1.0, 64)
        self.env = env
        self.policy = policy
        self.seed = seed
        self.step = step

    def state_of(self, messages, task):
        users = [text for role, text in messages[1:] if role == 'user']
        revealed = self.env.revealed_answer(users[-1]) if users else None
        return self.env.turn_state(task, revealed)

    def complete(self, messages, key=None):
        record_id, attempt = key
        task = self.env.task_of(record_id)
        round_index = sum(1 for role, text in messages if role == 'assistant')
        state = self.state_of(messages, task)
        rng = seeded_rng(self.seed, self.step, task, attempt, round_index)
        action = self.policy.sample(state, rng)
        if action == SEARCH_ACTION:
            return format_turn('state %d: search' % state,
                               Search([QUERY_TPL % task]))
        return format_turn('state %d: answer' % state,
                           Answer(ANSWER_TPL % action))

    def judge(self, prompt, key=None, context=None):
        raise NotImplementedError('the toy policy does not judge')
