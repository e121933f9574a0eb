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
from sounder.dataset import load_records, save_records, run_tagging
from sounder.utils import _, N_, ArgparseArgument, write_jsonl
from sounder.utils import messages as m


class Tag(Command):
    doc = N_('Tag the difficulty of every record from four attempts of the '
             'configured model')
    name = 'tag'

    def __init__(self):
        Command.__init__(self,
            [ArgparseArgument('records',
                help=_('line-delimited JSON file with the records to tag'))])

    def run(self, config, args):
        records = load_records(check_input(args.records))
        audit = []
        try:
            tagged, audit = run_tagging(records, config.agent_config(),
                                        config.model(), config.search(),
                                        config.judge(), config.workers,
                                        audit, config.data_dir)
        finally:
            # partial audits are flushed too
            write_jsonl(audit, output_path(config, 'tagging_audit.jsonl'))
        save_records(tagged, output_path(config, 'tagged.jsonl'))
        m.message(_('Tagged %d records, %d attempts audited') %
                  (len(tagged), len(audit)))


register_command(Tag)
