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

from dataclasses import replace

from sounder.agent.episode import run_episodes
from sounder.enums import GraderMode
from sounder.errors import UsageError
from sounder.reward.grader import accuracy_of
from sounder.search import NullSearchBackend
from sounder.utils import _, run_in_pool
from sounder.utils import messages as m


def pass_at_k(records, model, k, judge, agent_config, workers=1,
              data_dir=None):
    '''
    Whether C{model} answers each record correctly at least once in C{k}
    attempts with search disabled

    @return: {record id: bool}
    @rtype: dict
    '''
    config = replace(agent_config, allow_search=False)
    jobs = [(r, a) for r in records for a in range(k)]
    trajectories = run_episodes(jobs, model, NullSearchBackend(), config,
                                workers, data_dir)

    def _grade(record, trajectory):
        return lambda: accuracy_of(trajectory, record, GraderMode.STRICT,
                                   judge, data_dir)[0]
    accuracies = run_in_pool([_grade(r, t) for (r, a), t in
                              zip(jobs, trajectories)], workers)
    passed = dict((r.id, False) for r in records)
    for (record, attempt), acc in zip(jobs, accuracies):
        if acc == 1.0:
            passed[record.id] = True
    return passed


def isolation_filter(records, model_a, model_b, k, judge, agent_config,
                     workers=1, data_dir=None):
    '''
    Drops the records both models solve without searching.

    Each model gets C{k} search-free attempts per record. A record is
    dropped only when both reach pass@k; the survivors are the questions
    where searching can make a difference between the two.

    @return: surviving records in input order
    @rtype: list
    '''
    if k < 1:
        raise UsageError(_('k must be at least 1'))
    records = list(records)
    passed_a = pass_at_k(records, model_a, k, judge, agent_config, workers,
                         data_dir)
    passed_b = pass_at_k(records, model_b, k, judge, agent_config, workers,
                         data_dir)
    survivors = [r for r in records
                 if not (passed_a[r.id] and passed_b[r.id])]
    m.action(_('%d of %d records survive isolation at k=%d') %
             (len(survivors), len(records), k))
    return survivors
