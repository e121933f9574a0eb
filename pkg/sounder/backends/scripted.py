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
import threading

from sounder.backends import ModelBackend
from sounder.enums import BackendKind
from sounder.errors import ExhaustedScript, DataValidationError
from sounder.utils import _

ANY = '*'


class ScriptedBackend(ModelBackend):
    '''
    Replays canned turns, for tests and golden runs.

    Turns are grouped by entry: C{"<record_id>#<attempt>"}, C{"<record_id>"}
    or the catch-all C{"*"}, looked up in that order for the key of the
    request. Every key replays its entry from the first turn, so results do
    not depend on how concurrent episodes are scheduled.
    '''

    kind = BackendKind.SCRIPTED

    def __init__(self, turns, max_concurrent=64):
        ModelBackend.__init__(self, 'scripted', 0.0, max_concurrent)
        if isinstance(turns, (list, tuple)):
            turns = {ANY: list(turns)}
        self.turns = {k: list(v) for k, v in turns.items()}
        self._cursors = {}
        self._lock = threading.Lock()

    @classmethod
    def load(cls, path, **kwargs):
        with open(path, encoding='utf-8') as f:
            try:
                data = json.load(f)
            except ValueError as e:
                raise DataValidationError(_('invalid JSON: %s') % e, path)
        turns = data.get('turns') if isinstance(data, dict) else None
        if not isinstance(turns, dict) or \
                not all(isinstance(v, list) for v in turns.values()):
            raise DataValidationError(_("'turns' must map entries to lists "
                                        "of strings"), path)
        return cls(turns, **kwargs)

    def _entry(self, key):
        if key is None:
            candidates = [ANY]
        else:
            record_id, attempt = key
            candidates = ['%s#%s' % (record_id, attempt), record_id, ANY]
        for c in candidates:
            if c in self.turns:
                return c
        raise ExhaustedScript(key)

    def _next(self, key):
        entry = self._entry(key)
        with self._lock:
            cursor = self._cursors.get((entry, key), 0)
            turns = self.turns[entry]
            if cursor >= len(turns):
                raise ExhaustedScript(key)
            self._cursors[(entry, key)] = cursor + 1
            return turns[cursor]

    def complete(self, messages, key=None):
        with self._semaphore:
            return self._next(key)

    def judge(self, prompt, key=None, context=None):
        with self._semaphore:
            return self._next(key)

    def reset(self):
        with self._lock:
            self._cursors = {}
