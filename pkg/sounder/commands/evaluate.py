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

from sounder.commands import Command, register_command, output_path, \
    check_input
from sounder.dataset import load_records
from sounder.eval import evaluate, behavior_stats
from sounder.eval.report import write_report_json, write_outcomes_csv
from sounder.utils import _, N_, ArgparseArgument
from sounder.utils import messages as m


class Eval(Command):
    doc = N_('Evaluate the model with the strict grader')
    name = 'eval'

    def __init__(self):
        Command.__init__(self,
            [ArgparseArgument('records',
                help=_('line-delimited JSON file with the records')),
             ArgparseArgument('--runs', type=int, default=None,
                help=_('evaluation runs, eval_runs from the configuration '
                       'by default')),
             ArgparseArgument('--behaviors', action='store_true',
                default=False,
                help=_('also count information seeking behaviors'))])

    def run(self, config, args):
        records = load_records(check_input(args.records))
        runs = args.runs if args.runs is not None else config.eval_runs
        judge = config.judge()
        report = evaluate(records, config.model(), config.search(),
                          config.agent_config(), judge, runs,
                          config.workers, config.data_dir)
        if args.behaviors:
            counts = behavior_stats(report.trajectories, judge, records,
                                    config.workers, config.data_dir)
            report.behaviors = counts.to_dict()
        write_report_json(report, output_path(config, 'eval_report.json'))
        write_outcomes_csv(report.outcomes,
                           output_path(config, 'eval_outcomes.csv'))
        m.message(_('Accuracy %.4f over %d records, %.2f search rounds and '
                    '%.2f queries per trajectory') %
                  (report.accuracy, report.n, report.avg_search_rounds,
                   report.avg_search_queries))


register_command(Eval)
