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

from sounder.commands import Command, register_command, output_path
from sounder.grpo import ToySeekEnv, train_toy
from sounder.utils import _, N_, ArgparseArgument
from sounder.utils import messages as m


class TrainToy(Command):
    doc = N_('Train a tabular policy on the toy information seeking '
             'environment')
    name = 'train-toy'

    def __init__(self):
        Command.__init__(self,
            [ArgparseArgument('--steps', type=int, default=None,
                help=_('optimization steps, toy_steps from the '
                       'configuration by default'))])

    def run(self, config, args):
        env = ToySeekEnv.generate(config.toy_tasks, config.toy_answers,
                                  config.toy_unanswerable_ratio, config.seed)
        steps = args.steps if args.steps is not None else config.toy_steps
        log = train_toy(env, config.toy_grpo_config(), steps, config.seed,
                        config.agent_config(top_k_per_query=1),
                        config.toy_schedule(), config.strict_format,
                        config.workers)
        log.save(output_path(config, 'training_log.jsonl'))
        first, last = log.steps[0], log.steps[-1]
        m.message(_('Reward %.3f -> %.3f, search rate %.3f -> %.3f') %
                  (first['mean_reward'], last['mean_reward'],
                   first['search_rate'], last['search_rate']))


register_command(TrainToy)
