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

from collections import OrderedDict
from dataclasses import dataclass, field

from sounder.agent.episode import run_episodes
from sounder.enums import Category, Difficulty, GraderMode, TerminatedBy
from sounder.errors import UsageError
from sounder.reward.grader import accuracy_of
from sounder.utils import _, run_in_pool
from sounder.utils import messages as m


@dataclass(frozen=True)
class RecordOutcome:
    id: str
    run: int
    category: str
    difficulty: str
    answered: bool
    correct: bool
    search_rounds: int
    search_queries: int
    terminated_by: str

    CSV_FIELDS = ['id', 'run', 'category', 'difficulty', 'answered',
                  'correct', 'search_rounds', 'search_queries',
                  'terminated_by']

    def to_row(self):
        return [self.id, self.run, self.category, self.difficulty or '',
                int(self.answered), int(self.correct), self.search_rounds,
                self.search_queries, self.terminated_by]


@dataclass
class EvalReport:
    '''
    Aggregated evaluation results

    @ivar per_subset: {subset: {accuracy, avg_search_rounds,
                      avg_search_queries, n}} for the category and the
                      difficulty breakdowns
    @ivar behaviors: mean behavior counts, when they were computed
    '''
    accuracy: float
    avg_search_rounds: float
    avg_search_queries: float
    per_subset: dict
    n: int
    runs: int = 1
    per_run_accuracy: list = field(default_factory=list)
    behaviors: dict = None
    outcomes: list = field(default_factory=list, repr=False)
    trajectories: list = field(default_factory=list, repr=False)

    def to_dict(self):
        d = {'accuracy': self.accuracy,
             'avg_search_rounds': self.avg_search_rounds,
             'avg_search_queries': self.avg_search_queries,
             'n': self.n,
             'runs': self.runs,
             'per_run_accuracy': list(self.per_run_accuracy),
             'per_subset': self.per_subset}
        if self.behaviors is not None:
            d['behaviors'] = self.behaviors
        return d


def _mean(values):
    values = list(values)
    if not values:
        return 0.0
    return sum(values) / len(values)


def _summarize(outcomes):
    return OrderedDict([
        ('accuracy', _mean(int(o.correct) for o in outcomes)),
        ('avg_search_rounds', _mean(o.search_rounds for o in outcomes)),
        ('avg_search_queries', _mean(o.search_queries for o in outcomes)),
        ('n', len(set(o.id for o in outcomes)))])


def subsets_of(record):
    keys = [Category.subset(record.category)]
    difficulty = Difficulty.subset(record.difficulty)
    if difficulty is not None:
        keys.append(difficulty)
    return keys


def aggregate(records, outcomes, runs):
    '''
    Builds the report from per-run outcomes. Search intensity only depends
    on the trajectories, never on the judge.
    '''
    by_id = dict((r.id, r) for r in records)
    groups = OrderedDict()
    for o in outcomes:
        for key in subsets_of(by_id[o.id]):
            groups.setdefault(key, []).append(o)
    per_run = [_mean(int(o.correct) for o in outcomes if o.run == r)
               for r in range(runs)]
    overall = _summarize(outcomes)
    return EvalReport(overall['accuracy'], overall['avg_search_rounds'],
                      overall['avg_search_queries'],
                      dict((k, dict(_summarize(v))) for k, v in groups.items()),
                      len(records), runs, per_run, None, list(outcomes))


def evaluate(records, model, search, agent_config, judge, runs=3, workers=1,
             data_dir=None):
    '''
    Runs every record C{runs} times and grades the answers with the strict
    grader.

    Failed episodes and judge failures count as incorrect. Accuracy is
    reported per run and averaged across runs, together with the average
    number of search rounds and queries per trajectory.

    @param runs: evaluation runs, also used as attempt numbers
    @type runs: int
    @rtype: L{EvalReport}
    '''
    if runs < 1:
        raise UsageError(_('runs must be at least 1'))
    records = list(records)
    jobs = [(r, run) for run in range(runs) for r in records]
    m.action(_('Evaluating %d records, %d run(s)') % (len(records), runs))
    trajectories = run_episodes(jobs, model, search, agent_config, workers,
                                data_dir)

    def _grade(record, trajectory):
        return lambda: accuracy_of(trajectory, record, GraderMode.STRICT,
                                   judge, data_dir)[0]
    accuracies = run_in_pool([_grade(r, t) for (r, run), t in
                              zip(jobs, trajectories)], workers)

    outcomes = []
    for (record, run), t, acc in zip(jobs, trajectories, accuracies):
        outcomes.append(RecordOutcome(
            record.id, run, record.category, record.difficulty,
            t.terminated_by == TerminatedBy.ANSWERED, acc == 1.0,
            t.search_rounds(), t.search_queries(), t.terminated_by))
    report = aggregate(records, outcomes, runs)
    report.trajectories = trajectories
    return report
