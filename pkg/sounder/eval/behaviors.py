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

from sounder.enums import Behavior
from sounder.errors import BackendError
from sounder.utils import _, load_template, run_in_pool
from sounder.utils import messages as m

TEMPLATES = {
    Behavior.REFLECTION_CORRECTION: 'behavior_reflection',
    Behavior.CONFLICT_RESOLUTION: 'behavior_conflict',
    Behavior.VERIFICATION_DENOISING: 'behavior_verification',
}

_count_re = re.compile(r'<count>\s*(\d+)\s*</count>')


@dataclass(frozen=True)
class BehaviorCounts:
    ''' Mean occurrences of each behavior per trajectory '''
    reflection_correction: float = 0.0
    conflict_resolution: float = 0.0
    verification_denoising: float = 0.0

    def to_dict(self):
        return {Behavior.REFLECTION_CORRECTION: self.reflection_correction,
                Behavior.CONFLICT_RESOLUTION: self.conflict_resolution,
                Behavior.VERIFICATION_DENOISING: self.verification_denoising}


def parse_count(text):
    found = _count_re.findall(text)
    if not found:
        return None
    return int(found[-1])


def count_behavior(trajectory, behavior, judge, solution='', data_dir=None):
    '''
    Asks the judge how many times C{behavior} shows in the reasoning chain.
    An unparseable answer is asked again once and then counted as 0.
    '''
    prompt = load_template(TEMPLATES[behavior], data_dir).substitute(
        query=trajectory.question, cot=trajectory.reasoning_chain(),
        solution=solution)
    key = (trajectory.record_id, trajectory.attempt)
    try:
        for retry in [False, True]:
            count = parse_count(judge.judge(prompt, key=key))
            if count is not None:
                return count
    except BackendError as e:
        m.warning(_('%s: %s, counted as 0') % (trajectory.record_id, e))
        return 0
    m.warning(_('%s: no count found for %s, counted as 0') %
              (trajectory.record_id, behavior))
    return 0


def behavior_stats(trajectories, judge, records=None, workers=1,
                   data_dir=None):
    '''
    Mean count of each information seeking behavior over C{trajectories}

    @param records: records providing the reference solutions, optional
    @type records: list
    @rtype: L{BehaviorCounts}
    '''
    trajectories = list(trajectories)
    if not trajectories:
        return BehaviorCounts()
    solutions = dict((r.id, r.solution) for r in records or [])
    behaviors = [Behavior.REFLECTION_CORRECTION, Behavior.CONFLICT_RESOLUTION,
                 Behavior.VERIFICATION_DENOISING]

    # the judge sees the behaviors of one trajectory in a fixed order
    def _job(t):
        return lambda: [count_behavior(t, b, judge,
                                       solutions.get(t.record_id, ''),
                                       data_dir) for b in behaviors]
    counts = run_in_pool([_job(t) for t in trajectories], workers)
    n = len(trajectories)
    means = [sum(c[i] for c in counts) / n for i in range(len(behaviors))]
    return BehaviorCounts(*means)
