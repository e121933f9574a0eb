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
    check_input, load_trajectories
from sounder.dataset import load_records
from sounder.eval import behavior_stats
from sounder.utils import _, N_, ArgparseArgument, write_json
from sounder.utils import messages as m


class Behaviors(Command):
    doc = N_('Count information seeking behaviors in dumped trajectories')
    name = 'behaviors'

    def __init__(self):
        Command.__init__(self,
            [ArgparseArgument('trajectories',
                help=_('trajectories file written by rollout')),
             ArgparseArgument('--records', default=None,
                help=_('records file providing the reference solutions'))])

    def run(self, config, args):
        trajectories = load_trajectories(args.trajectories)
        records = None
        if args.records:
            records = load_records(check_input(args.records))
        counts = behavior_stats(trajectories, config.judge(), records,
                                config.workers, config.data_dir)
        write_json(counts.to_dict(), output_path(config, 'behaviors.json'))
        m.message(_('Reflection %.2f, conflict resolution %.2f, '
                    'verification %.2f per trajectory') %
                  (counts.reflection_correction, counts.conflict_resolution,
                   counts.verification_denoising))


register_command(Behaviors)
