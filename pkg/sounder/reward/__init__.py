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

from sounder.enums import GraderMode, TerminatedBy
from sounder.errors import ConfigurationError
from sounder.utils import _

LOOSE_THRESHOLD = 6
STRICT_ROUNDS = 3
STRICT_MAJORITY = 2
BONUS = 1.0


@dataclass(frozen=True)
class LooseVerdict:
    score: int
    rationale: str = ''

    def __post_init__(self):
        if not 1 <= self.score <= 10:
            raise ValueError('loose score must be in [1, 10]')


@dataclass(frozen=True)
class StrictVerdict:
    judgments: tuple

    def __post_init__(self):
        object.__setattr__(self, 'judgments', tuple(bool(j) for j in
                                                    self.judgments))
        if len(self.judgments) != STRICT_ROUNDS:
            raise ValueError('strict verdicts hold exactly 3 judgments')


@dataclass(frozen=True)
class ScheduleConfig:
    switch_step: int = 80

    def __post_init__(self):
        if self.switch_step < 0:
            raise ConfigurationError(_('switch_step must be >= 0'))


@dataclass(frozen=True)
class RewardBreakdown:
    '''
    Reward of one rollout

    @ivar format: 1 when the rollout ended with a cleanly parsed answer
    @ivar accuracy: 1.0 when the grader accepted the answer
    @ivar extra_search_bonus: 1.0 for correct searching rollouts of a group
                              no search-free rollout solved
    '''
    format: int
    accuracy: float
    extra_search_bonus: float
    total: float

    @classmethod
    def compose(cls, format, accuracy, bonus):
        return cls(format, accuracy, bonus, format * accuracy + bonus)

    def to_dict(self):
        return {'format': self.format, 'accuracy': self.accuracy,
                'extra_search_bonus': self.extra_search_bonus,
                'total': self.total}


def loose_reward(verdict):
    return 1.0 if verdict.score >= LOOSE_THRESHOLD else 0.0


def strict_reward(verdict):
    return 1 if sum(verdict.judgments) >= STRICT_MAJORITY else 0


def verdict_reward(verdict):
    if isinstance(verdict, LooseVerdict):
        return loose_reward(verdict)
    return float(strict_reward(verdict))


def extra_search_bonus(group):
    '''
    Bonus of every rollout of a group.

    Correct rollouts that searched get 1.0, but only when no rollout that
    skipped searching was correct and at least one searching rollout was.

    @param group: (used_search, correct) pairs
    @type group: list
    @rtype: list of float
    '''
    if not group:
        raise ValueError('empty rollout group')
    group = [(bool(s), bool(c)) for s, c in group]
    no_search_solved = any(c for s, c in group if not s)
    search_solved = any(c for s, c in group if s)
    if no_search_solved or not search_solved:
        return [0.0] * len(group)
    return [BONUS if s and c else 0.0 for s, c in group]


def format_reward(trajectory, strict=False):
    '''
    1 when the episode ended with an answer and every turn parsed. In
    strict mode turns whose queries had to be truncated also fail.
    '''
    if trajectory.terminated_by != TerminatedBy.ANSWERED:
        return 0
    if strict and any(getattr(r.action, 'truncated', False)
                      for r in trajectory.rounds):
        return 0
    return 1


def reward_mode_at(step, schedule):
    if step < 0:
        raise ValueError('step must be >= 0')
    if step < schedule.switch_step:
        return GraderMode.LOOSE
    return GraderMode.STRICT
