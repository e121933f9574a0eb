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

import argparse
import errno
import logging
import os
import sys
import time
import traceback

from sounder import config, commands
from sounder.errors import UsageError, FatalError, ConfigurationError, \
    BackendError, DataValidationError, SounderException
from sounder.utils import _, N_
from sounder.utils import messages as m

description = N_('Run iterative search agents, grade them and train toy '
                 'policies with group relative policy optimization')

EXIT_CONFIG = 1
EXIT_BACKEND = 2
EXIT_DATA = 3


class Main(object):

    def __init__(self, args):
        self.create_parser()
        self.load_commands()
        self.parse_arguments(args)
        self.init_logging()
        self.load_config()
        self.run_command()

    def log_error(self, msg, print_usage=False, command=None,
                  code=EXIT_CONFIG):
        ''' Log an error and exit '''
        if command is not None:
            m.error("***** Error running '%s' command:" % command)
        m.error('%s' % msg)
        if print_usage:
            self.parser.print_usage(sys.stderr)
        sys.exit(code)

    def init_logging(self):
        ''' Initialize logging '''
        if self.args.timestamps:
            m.START_TIME = time.monotonic()
        logging.getLogger().setLevel(logging.INFO)
        logging.getLogger().addHandler(logging.StreamHandler())

    def create_parser(self):
        ''' Creates the arguments parser '''
        self.parser = argparse.ArgumentParser(description=_(description))
        self.parser.add_argument('-t', '--timestamps', action='store_true',
                default=False,
                help=_('Print timestamps with every message printed'))
        self.parser.add_argument('-c', '--config', action='append', type=str,
                default=None, help=_('Configuration file used for the run'))
        self.parser.add_argument('--seed', type=int, default=None,
                help=_('Seed of every random draw of the run'))
        self.parser.add_argument('--workers', type=int, default=None,
                help=_('Number of episodes or judge calls run concurrently'))
        self.parser.add_argument('--out', type=str, default=None,
                help=_('Directory the outputs are written to'))

    def parse_arguments(self, args):
        ''' Parse the command line arguments '''
        # If no commands, make it show the help by default
        if len(args) == 0:
            args = ["-h"]
        self.args = self.parser.parse_args(args)

    def load_commands(self):
        subparsers = self.parser.add_subparsers(help=_('sub-command help'),
                                                dest='command')
        commands.load_commands(subparsers)

    def load_config(self):
        ''' Load the configuration '''
        try:
            self.config = config.Config()
            self.config.load(self.args.config)
            if self.args.seed is not None:
                self.config.set_property('seed', self.args.seed, True)
            if self.args.workers is not None:
                self.config.set_property('workers', self.args.workers, True)
            if self.args.out is not None:
                self.config.set_property('output_dir',
                                         os.path.abspath(self.args.out), True)
            self.config._validate_properties()
        except ConfigurationError as exc:
            self.log_error(exc, False)
        except DataValidationError as exc:
            self.log_error(exc, False, code=EXIT_DATA)

    def run_command(self):
        command = self.args.command
        try:
            res = commands.run(command, self.config, self.args)
        except (UsageError, ConfigurationError) as exc:
            self.log_error(exc, isinstance(exc, UsageError), command)
        except BackendError as exc:
            self.log_error(exc, False, command, EXIT_BACKEND)
        except DataValidationError as exc:
            self.log_error(exc, False, command, EXIT_DATA)
        except FatalError as exc:
            traceback.print_exc()
            self.log_error(exc, False, command)
        except SounderException as exc:
            self.log_error(exc, False, command)
        except KeyboardInterrupt:
            self.log_error(_('Interrupted'))
        except IOError as e:
            if e.errno != errno.EPIPE:
                raise
            sys.exit(0)

        if res:
            sys.exit(res)


def main():
    Main(sys.argv[1:])


if __name__ == "__main__":
    main()
