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

import os
import sys
import json
import zlib
import gettext
import asyncio
import threading
from collections.abc import Iterable
from string import Template

import numpy as np

from sounder.errors import FatalError, DataValidationError

_ = gettext.gettext
N_ = lambda x: x


class ArgparseArgument(object):

    def __init__(self, *name, **kwargs):
        self.name = name
        self.args = kwargs

    def add_to_parser(self, parser):
        parser.add_argument(*self.name, **self.args)


def determine_num_of_cpus():
    ''' Number of virtual or physical CPUs on this system '''
    try:
        import multiprocessing
        return multiprocessing.cpu_count()
    except (ImportError, NotImplementedError):
        return 1


def parse_file(filename, dict):
    if '__file__' not in dict:
        dict['__file__'] = filename
    try:
        with open(filename) as f:
            exec(compile(f.read(), filename, 'exec'), dict)
    except Exception as ex:
        import traceback
        traceback.print_exc()
        raise ex


def find_data_dir():
    '''
    Locate the directory holding the prompt templates, either next to the
    sources (uninstalled) or under the installation prefix.
    '''
    uninstalled = os.path.abspath(os.path.join(os.path.dirname(__file__),
                                               '..', '..', 'data'))
    if os.path.isdir(uninstalled):
        return uninstalled
    installed = os.path.join(sys.prefix, 'share', 'sounder')
    if os.path.isdir(installed):
        return installed
    raise FatalError(_("Data dir not found"))


_templates = {}
_templates_lock = threading.Lock()


def load_template(name, data_dir=None):
    '''
    Load a prompt template from the data directory

    @param name: template name without extension
    @type name: str
    @return: the template
    @rtype: L{string.Template}
    '''
    if data_dir is None:
        data_dir = find_data_dir()
    path = os.path.join(data_dir, 'templates', '%s.tpl' % name)
    with _templates_lock:
        if path not in _templates:
            if not os.path.exists(path):
                raise FatalError(_("Template %s not found") % path)
            with open(path, encoding='utf-8') as f:
                _templates[path] = Template(f.read())
        return _templates[path]


def seeded_rng(seed, *keys):
    '''
    Returns a numpy generator derived from the seed and a list of keys, so
    that parallel work items get independent but reproducible streams.
    Strings are folded to integers with crc32.
    '''
    entropy = [int(seed)]
    for k in keys:
        if isinstance(k, str):
            k = zlib.crc32(k.encode('utf-8'))
        entropy.append(int(k))
    return np.random.default_rng(np.random.SeedSequence(entropy))


def read_jsonl(path):
    entries = []
    with open(path, encoding='utf-8') as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line:
                continue
            try:
                entries.append(json.loads(line))
            except ValueError as e:
                raise DataValidationError(_('line %d is not valid JSON: %s') %
                                          (lineno, e), path)
    return entries


def write_jsonl(entries, path):
    ensure_dir(os.path.dirname(path))
    with open(path, 'w', encoding='utf-8') as f:
        for e in entries:
            f.write(json.dumps(e, ensure_ascii=False))
            f.write('\n')


def write_json(obj, path):
    ensure_dir(os.path.dirname(path))
    with open(path, 'w', encoding='utf-8') as f:
        f.write(json.dumps(obj, ensure_ascii=False, indent=2, sort_keys=True))
        f.write('\n')


def ensure_dir(path):
    if path and not os.path.exists(path):
        try:
            os.makedirs(path, exist_ok=True)
        except OSError:
            raise FatalError(_('directory (%s) can not be created') % path)


def get_event_loop():
    try:
        loop = asyncio.get_event_loop()
    except RuntimeError:
        loop = asyncio.new_event_loop()
        asyncio.set_event_loop(loop)
    if loop.is_closed():
        loop = asyncio.new_event_loop()
        asyncio.set_event_loop(loop)
    return loop


def run_until_complete(tasks, max_concurrent=determine_num_of_cpus()):
    '''
    Runs one or many tasks, blocking until all of them have finished.
    @param tasks: A single Future or a list of Futures to run
    @type tasks: Future or list of Futures
    @param max_concurrent: Number of concurrent tasks to execute
    @type max_concurrent: int
    @return: the result of the asynchronous task execution (if only
             one task) or a list of all results in case of multiple
             tasks, in submission order. Result is None if operation
             is cancelled.
    @rtype: any type or list of any types in case of multiple tasks
    '''
    if not tasks:
        return []

    loop = get_event_loop()

    # An event loop cannot be run within another one, so when called from
    # a running task the work is moved to a thread with its own loop.
    if loop.is_running():
        result = []

        def _run():
            result.append(run_until_complete(tasks, max_concurrent))
        thread = threading.Thread(target=_run)
        thread.start()
        thread.join()
        return result[0] if result else None

    try:
        if isinstance(tasks, Iterable):
            if not max_concurrent:
                result = loop.run_until_complete(asyncio.gather(*tasks))
            else:
                async def _worker(semaphore, task):
                    async with semaphore:
                        return await task

                async def _gather():
                    semaphore = asyncio.Semaphore(max_concurrent)
                    return await asyncio.gather(
                        *[_worker(semaphore, task) for task in tasks])
                result = loop.run_until_complete(_gather())
        else:
            result = loop.run_until_complete(tasks)
        return result
    except asyncio.CancelledError:
        return None


def run_in_pool(callables, max_concurrent=determine_num_of_cpus()):
    '''
    Runs blocking callables on the event loop executor with at most
    C{max_concurrent} of them in flight. Exceptions raised by a callable
    are propagated.

    @param callables: functions taking no arguments
    @type callables: list
    @return: results in the order the callables were given
    @rtype: list
    '''
    callables = list(callables)
    if not callables:
        return []
    if max_concurrent is not None and max_concurrent <= 1:
        return [c() for c in callables]

    async def _call(c):
        return await asyncio.get_running_loop().run_in_executor(None, c)

    return run_until_complete([_call(c) for c in callables], max_concurrent)
