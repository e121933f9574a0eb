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

from sounder.backends.http import resolve_path, post_json, \
    bearer_headers
from sounder.enums import DocumentSource, SearchKind
from sounder.errors import BackendDecodeError, ConfigurationError
from sounder.search import Document, SearchBackend, DEFAULT_MAX_DOC_CHARS
from sounder.utils import _

DEFAULT_API_KEY_ENV = 'SOUNDER_SEARCH_API_KEY'


class WebSearchBackend(SearchBackend):
    '''
    Client for JSON web search APIs.

    Each query is sent as C{{"query": ..., "count": k}}. The list of hits is
    looked up in the response with C{results_path} and every hit is mapped
    to a L{Document} through the configured field names, so providers with
    different response shapes only need a different configuration.
    '''

    kind = SearchKind.WEB

    def __init__(self, endpoint, results_path='data.webPages.value',
                 title_field='name', content_field='snippet', url_field='url',
                 api_key_env=DEFAULT_API_KEY_ENV, timeout=30.0, max_retries=3,
                 backoff=1.0, max_concurrent=4,
                 max_doc_chars=DEFAULT_MAX_DOC_CHARS):
        if timeout <= 0:
            raise ConfigurationError(_('search timeout must be positive'))
        self.endpoint = endpoint
        self.results_path = results_path
        self.title_field = title_field
        self.content_field = content_field
        self.url_field = url_field
        self.api_key_env = api_key_env
        self.timeout = timeout
        self.max_retries = max_retries
        self.backoff = backoff
        self.max_doc_chars = max_doc_chars
        self._semaphore = threading.BoundedSemaphore(max_concurrent)

    def _query(self, query, k):
        resp = post_json(self.endpoint, {'query': query, 'count': k},
                         bearer_headers(self.api_key_env), self.timeout,
                         self.max_retries, self.backoff, self._semaphore,
                         'search')
        try:
            hits = resolve_path(resp.json(), self.results_path)
        except (ValueError, KeyError, IndexError, TypeError) as e:
            raise BackendDecodeError(self.endpoint, str(e))
        if hits is None:
            return []
        docs = []
        for hit in hits:
            content = (hit.get(self.content_field) or '')[:self.max_doc_chars]
            if not content:
                continue
            docs.append(Document(hit.get(self.url_field, ''),
                                 hit.get(self.title_field, ''), content,
                                 len(docs) + 1, DocumentSource.WEB))
            if len(docs) == k:
                break
        return docs

    def search(self, queries, k):
        return [self._query(q, k) for q in queries]
