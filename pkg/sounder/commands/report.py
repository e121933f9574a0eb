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

from sounder.commands import Command, register_command, output_path, \
    check_input
from sounder.errors import UsageError
from sounder.eval.report import plot_training_log, plot_accuracy, \
    write_summary_csv
from sounder.grpo import TrainingLog
from sounder.utils import _, N_, ArgparseArgument
from sounder.utils import messages as m


class Report(Command):
    doc = N_('Plot training logs and evaluation reports')
    name = 'report'

    def __init__(self):
        Command.__init__(self,
            [ArgparseArgument('--training-log', default=None,
                help=_('training log written by train-toy')),
             ArgparseArgument('--eval-report', default=None,
                help=_('report written by eval'))])

    def run(self, config, args):
        if not args.training_log and not args.eval_report:
            raise UsageError(_('Nothing to report, pass --training-log '
                               'and/or --eval-report'))
        log = report = None
        written = []
        if args.training_log:
            log = TrainingLog.load(check_input(args.training_log))
            path = output_path(config, 'report', 'training.png')
            plot_training_log(log, path)
            written.append(path)
        if args.eval_report:
            with open(check_input(args.eval_report), encoding='utf-8') as f:
                report = json.load(f)
            path = output_path(config, 'report', 'accuracy.png')
            plot_accuracy(report, path)
            written.append(path)
        path = output_path(config, 'report', 'summary.csv')
        write_summary_csv(path, log, report)
        written.append(path)
        m.message(_('Wrote %s') % ', '.join(written))


register_command(Report)
