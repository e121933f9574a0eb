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

import threading

from sounder.enums import BackendKind
from sounder.errors import ConfigurationError
from sounder.utils import _


class ModelBackend:
    '''
    Base class for chat models used as policy or as judge

    @ivar kind: backend kind
    @ivar model_name: model identifier sent to the service
    @ivar temperature: sampling temperature of C{complete}
    '''

    kind = None

    def __init__(self, model_name='', temperature=0.0, max_concurrent=4):
        if temperature < 0:
            raise ConfigurationError(_('temperature must be >= 0'))
        if max_concurrent < 1:
            raise ConfigurationError(_('max_concurrent must be >= 1'))
        self.model_name = model_name
        self.temperature = temperature
        self._semaphore = threading.BoundedSemaphore(max_concurrent)

    def complete(self, messages, key=None):
        '''
        Produce the next model turn

        @param messages: (role, text) pairs, the system prompt first
        @type messages: list
        @param key: (record id, attempt) of the episode asking
        @type key: tuple
        @return: the raw model turn
        @rtype: str
        '''
        raise NotImplementedError

    def judge(self, prompt, key=None, context=None):
        '''
        Ask for a verdict on a grading prompt

        @param prompt: the fully rendered grading prompt
        @type prompt: str
        @param context: structured grading context (record, answer, mode),
                        only used by deterministic judges
        @type context: dict
        @return: the raw verdict text
        @rtype: str
        '''
        raise NotImplementedError


def from_config(settings, temperature=None):
    '''
    Create a model backend from a configuration dictionary

    @param settings: dict with a 'kind' key and backend specific options
    @type settings: dict
    @param temperature: default temperature when the dict has none
    @type temperature: float
    '''
    if not settings:
        raise ConfigurationError(_('No backend configured'))
    options = dict(settings)
    kind = options.pop('kind', None)
    if temperature is not None:
        options.setdefault('temperature', temperature)
    if kind == BackendKind.SCRIPTED:
        from sounder.backends.scripted import ScriptedBackend
        options.pop('temperature', None)
        return ScriptedBackend.load(options.pop('script'), **options)
    if kind == BackendKind.ORACLE:
        from sounder.backends.oracle import OracleJudgeBackend
        options.pop('temperature', None)
        return OracleJudgeBackend(**options)
    if kind == BackendKind.HTTP_CHAT:
        from sounder.backends.http import HttpChatBackend
        return HttpChatBackend(**options)
    raise ConfigurationError(_("Unknown model backend kind '%s'") % kind)
