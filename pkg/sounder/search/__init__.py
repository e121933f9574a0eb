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

from dataclasses import dataclass

from sounder.enums import DocumentSource, SearchKind
from sounder.errors import UsageError, ConfigurationError
from sounder.utils import _

DEFAULT_TOP_K = 2
DEFAULT_MAX_DOC_CHARS = 2000
MAX_QUERIES = 5


@dataclass(frozen=True)
class Document:
    '''
    A single search result

    @ivar url: source URL, also the deduplication key within a round
    @ivar rank: 1-based rank in its query's result list
    '''
    url: str
    title: str
    content: str
    rank: int = 1
    source: str = DocumentSource.SIMULATED

    def to_dict(self):
        return {'url': self.url, 'title': self.title, 'content': self.content,
                'rank': self.rank, 'source': self.source}

    @classmethod
    def from_dict(cls, d):
        return cls(d['url'], d['title'], d['content'], d.get('rank', 1),
                   d.get('source', DocumentSource.SIMULATED))


class SearchBackend:
    '''Base class for search engines'''

    kind = None

    def search(self, queries, k):
        '''
        Run every query and return one result list per query, each one
        ordered by descending relevance and holding at most C{k} documents.
        An empty list is a valid answer; only transport failures raise.
        '''
        raise NotImplementedError


class NullSearchBackend(SearchBackend):
    '''Search engine that never finds anything, used when search is
    disabled'''

    kind = SearchKind.NONE

    def search(self, queries, k):
        return [[] for q in queries]


def search(queries, k, backend):
    '''
    Searches with C{backend} after checking the request bounds

    @param queries: 1 to 5 query strings
    @type queries: list
    @param k: results kept per query
    @type k: int
    @return: a list of at most C{k} L{Document} per query
    @rtype: list
    '''
    if not 1 <= len(queries) <= MAX_QUERIES:
        raise UsageError(_("between 1 and %d queries are allowed, got %d") %
                         (MAX_QUERIES, len(queries)))
    if k < 1:
        raise UsageError(_("k must be at least 1"))
    results = backend.search(list(queries), k)
    return [list(r[:k]) for r in results]


def from_config(settings, max_doc_chars=DEFAULT_MAX_DOC_CHARS):
    '''
    Create a search backend from a configuration dictionary

    @param settings: dict with a 'kind' key and backend specific options
    @type settings: dict
    '''
    if settings is None:
        return NullSearchBackend()
    kind = settings.get('kind')
    if kind == SearchKind.SIMULATED:
        from sounder.search.simulated import SimCorpus, SimulatedSearchBackend
        corpus = SimCorpus.load(settings['corpus'])
        return SimulatedSearchBackend(corpus,
                settings.get('max_doc_chars', max_doc_chars))
    if kind == SearchKind.WEB:
        from sounder.search.web import WebSearchBackend
        options = dict(settings)
        options.pop('kind')
        options.setdefault('max_doc_chars', max_doc_chars)
        return WebSearchBackend(**options)
    if kind == SearchKind.NONE:
        return NullSearchBackend()
    raise ConfigurationError(_("Unknown search backend kind '%s'") % kind)
