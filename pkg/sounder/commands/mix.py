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
from sounder.dataset import load_records, save_records, select_mixture
from sounder.utils import _, N_, ArgparseArgument
from sounder.utils import messages as m


class Mix(Command):
    doc = N_('Select a training mixture of tagged records per category and '
             'difficulty')
    name = 'mix'

    def __init__(self):
        Command.__init__(self,
            [ArgparseArgument('records',
                help=_('line-delimited JSON file with tagged records'))])

    def run(self, config, args):
        records = load_records(check_input(args.records))
        subset, shortfalls = select_mixture(records, config.mixture_spec())
        save_records(subset, output_path(config, 'mixture.jsonl'))
        m.message(_('Selected %d of %d records, %d cell(s) short') %
                  (len(subset), len(records), len(shortfalls)))


register_command(Mix)
