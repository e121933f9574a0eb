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

from sounder.agent.episode import run_episodes
from sounder.commands import Command, register_command, output_path, \
    check_input
from sounder.dataset import load_records
from sounder.errors import UsageError
from sounder.utils import _, N_, ArgparseArgument, write_jsonl
from sounder.utils import messages as m


class Rollout(Command):
    doc = N_('Run the agent on every record and dump the trajectories')
    name = 'rollout'

    def __init__(self):
        Command.__init__(self,
            [ArgparseArgument('records',
                help=_('line-delimited JSON file with the records')),
             ArgparseArgument('-n', '--attempts', type=int, default=1,
                help=_('number of rollouts per record'))])

    def run(self, config, args):
        if args.attempts < 1:
            raise UsageError(_('attempts must be at least 1'))
        records = load_records(check_input(args.records))
        jobs = [(r, a) for r in records for a in range(args.attempts)]
        trajectories = run_episodes(jobs, config.model(), config.search(),
                                    config.agent_config(), config.workers,
                                    config.data_dir)
        write_jsonl([t.to_dict() for t in trajectories],
                    output_path(config, 'trajectories.jsonl'))
        answered = sum(1 for t in trajectories if t.final_answer is not None)
        m.message(_('%d trajectories, %d answered') %
                  (len(trajectories), answered))


register_command(Rollout)
