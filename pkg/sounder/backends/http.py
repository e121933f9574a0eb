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
import time

import requests

from sounder.backends import ModelBackend
from sounder.enums import BackendKind
from sounder.errors import BackendError, BackendTimeout, HttpStatusError, \
    BackendDecodeError, ConfigurationError
from sounder.utils import _
from sounder.utils import messages as m

DEFAULT_RESPONSE_PATH = 'choices.0.message.content'
DEFAULT_API_KEY_ENV = 'SOUNDER_MODEL_API_KEY'


def resolve_path(obj, path):
    '''
    Follows a dotted path through nested dicts and lists, numeric parts
    being list indexes. An empty path returns C{obj}.
    '''
    for part in [p for p in path.split('.') if p]:
        if isinstance(obj, list):
            obj = obj[int(part)]
        else:
            obj = obj[part]
    return obj


def bearer_headers(api_key_env):
    headers = {'Content-Type': 'application/json'}
    key = os.environ.get(api_key_env) if api_key_env else None
    if key:
        headers['Authorization'] = 'Bearer %s' % key
    return headers


def should_retry(status_code):
    return status_code == 429 or 500 <= status_code < 600


def post_json(endpoint, body, headers, timeout, max_retries, backoff,
              semaphore, what='request'):
    '''
    POSTs C{body} as JSON and returns the 200 response.

    Timeouts, 429 and 5xx answers are retried up to C{max_retries} times,
    waiting C{backoff * 2**attempt} seconds in between. Other failures are
    raised right away.

    @raise BackendError: the request failed for good
    '''
    attempt = 0
    while True:
        try:
            with semaphore:
                resp = requests.post(endpoint, json=body, headers=headers,
                                     timeout=timeout)
            if resp.status_code == 200:
                return resp
            error = HttpStatusError(endpoint, resp.status_code, resp.text)
            retry = should_retry(resp.status_code)
        except requests.Timeout:
            error = BackendTimeout(endpoint, timeout)
            retry = True
        except requests.RequestException as e:
            error = BackendError(_("Request to '%s' failed: %s") %
                                 (endpoint, e))
            retry = False
        if not retry or attempt >= max_retries:
            raise error
        delay = backoff * (2 ** attempt)
        m.action(_('retrying %s in %.1fs: %s') % (what, delay, error))
        time.sleep(delay)
        attempt += 1


class HttpChatBackend(ModelBackend):
    '''
    Client for chat-completion style HTTP endpoints.

    The request body is C{{"model", "messages": [{"role", "content"}],
    "temperature"}} and the turn is read from C{response_path}. Timeouts,
    429 and 5xx answers are retried with exponential backoff; other errors
    are raised right away.
    '''

    kind = BackendKind.HTTP_CHAT

    def __init__(self, endpoint, model_name='', temperature=0.9,
                 judge_temperature=0.0, timeout=60.0, max_retries=3,
                 backoff=1.0, max_concurrent=4,
                 response_path=DEFAULT_RESPONSE_PATH,
                 api_key_env=DEFAULT_API_KEY_ENV):
        ModelBackend.__init__(self, model_name, temperature, max_concurrent)
        if timeout <= 0:
            raise ConfigurationError(_('timeout must be positive'))
        if max_retries < 0:
            raise ConfigurationError(_('max_retries must be >= 0'))
        self.endpoint = endpoint
        self.judge_temperature = judge_temperature
        self.timeout = timeout
        self.max_retries = max_retries
        self.backoff = backoff
        self.response_path = response_path
        self.api_key_env = api_key_env

    def _request(self, messages, temperature):
        body = {'model': self.model_name,
                'messages': [{'role': r, 'content': c} for r, c in messages],
                'temperature': temperature}
        resp = post_json(self.endpoint, body,
                         bearer_headers(self.api_key_env), self.timeout,
                         self.max_retries, self.backoff, self._semaphore)
        return self._decode(resp)

    def _decode(self, resp):
        try:
            text = resolve_path(resp.json(), self.response_path)
        except (ValueError, KeyError, IndexError, TypeError) as e:
            raise BackendDecodeError(self.endpoint, '%s: %r' %
                                     (e, resp.text[:200]))
        if not isinstance(text, str):
            raise BackendDecodeError(self.endpoint,
                                     _('%s is not a string') %
                                     self.response_path)
        return text

    def complete(self, messages, key=None):
        if not messages:
            raise ValueError('messages must not be empty')
        return self._request(messages, self.temperature)

    def judge(self, prompt, key=None, context=None):
        return self._request([('user', prompt)], self.judge_temperature)
