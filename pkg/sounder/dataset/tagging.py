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

import threading

from sounder.agent.episode import run_episode
from sounder.dataset import tag_difficulty
from sounder.enums import GraderMode, TerminatedBy
from sounder.errors import BackendError
from sounder.reward import strict_reward
from sounder.reward.grader import grade
from sounder.utils import _, run_in_pool
from sounder.utils import messages as m

ATTEMPTS = 4


def _attempt(record, attempt, agent_config, model, search, judge, data_dir):
    trajectory = run_episode(record, model, search, agent_config, attempt,
                             data_dir)
    entry = {'id': record.id, 'attempt': attempt,
             'answer': trajectory.final_answer, 'judgments': [],
             'correct': False}
    if trajectory.terminated_by != TerminatedBy.ANSWERED:
        return entry
    try:
        verdict = grade(record, trajectory.final_answer, GraderMode.STRICT,
                        judge, (record.id, attempt), data_dir)
    except BackendError as e:
        m.warning(_('%s attempt %d counted as incorrect: %s') %
                  (record.id, attempt, e))
        return entry
    entry['judgments'] = list(verdict.judgments)
    entry['correct'] = strict_reward(verdict) == 1
    return entry


def run_tagging(records, agent_config, model, search, judge, workers=1,
                audit=None, data_dir=None):
    '''
    Tags every record with its difficulty for C{model}.

    Each record is attempted exactly 4 times and each answer is checked with
    the strict grader. The number of correct attempts gives the difficulty.

    @param audit: list receiving audit entries as soon as they are ready,
                  so an interrupted run can still save what it did
    @type audit: list
    @return: tagged records and the audit entries, both in input order
    @rtype: tuple
    '''
    records = list(records)
    lock = threading.Lock()
    total = len(records) * ATTEMPTS

    def _job(i, record, attempt):
        def _run():
            entry = _attempt(record, attempt, agent_config, model, search,
                             judge, data_dir)
            with lock:
                if audit is not None:
                    audit.append(entry)
            m.step(i * ATTEMPTS + attempt + 1, total, record.id,
                   'correct' if entry['correct'] else 'incorrect')
            return entry
        return _run

    jobs = [_job(i, r, a) for i, r in enumerate(records)
            for a in range(ATTEMPTS)]
    entries = run_in_pool(jobs, workers)

    tagged = []
    for i, record in enumerate(records):
        attempts = entries[i * ATTEMPTS:(i + 1) * ATTEMPTS]
        n_correct = sum(1 for e in attempts if e['correct'])
        tagged.append(record.with_difficulty(tag_difficulty(n_correct)))
    return tagged, entries
