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
from sounder.dataset import load_records, save_records
from sounder.eval import isolation_filter
from sounder.utils import _, N_, ArgparseArgument
from sounder.utils import messages as m


class Isolate(Command):
    doc = N_('Keep the records the model and the baseline can not both '
             'solve without searching')
    name = 'isolate'

    def __init__(self):
        Command.__init__(self,
            [ArgparseArgument('records',
                help=_('line-delimited JSON file with the records')),
             ArgparseArgument('-k', type=int, default=None,
                help=_('search-free attempts per model, isolation_k from '
                       'the configuration by default'))])

    def run(self, config, args):
        records = load_records(check_input(args.records))
        k = args.k if args.k is not None else config.isolation_k
        survivors = isolation_filter(records, config.model(),
                                     config.baseline(), k, config.judge(),
                                     config.agent_config(), config.workers,
                                     config.data_dir)
        save_records(survivors,
                     output_path(config, 'isolation_survivors.jsonl'))
        m.message(_('%d of %d records survive') %
                  (len(survivors), len(records)))


register_command(Isolate)
