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

import re
import json
import math
from dataclasses import dataclass, field

from sounder.enums import DocumentSource, SearchKind
from sounder.errors import DataValidationError
from sounder.search import Document, SearchBackend, DEFAULT_MAX_DOC_CHARS
from sounder.utils import _, seeded_rng

_token_re = re.compile(r'\w+')


def tokenize(text):
    ''' Case-folded word tokens, splitting on whitespace and punctuation '''
    return _token_re.findall(text.casefold())


@dataclass(frozen=True)
class SimDoc:
    doc_id: str
    title: str
    content: str
    tags: tuple = ()

    @property
    def url(self):
        return 'sim://%s' % self.doc_id

    def tokens(self):
        return tokenize(self.title + ' ' + self.content)


@dataclass(frozen=True)
class SimCorpus:
    '''
    Immutable simulated corpus

    @ivar conflict_sets: groups of doc ids asserting contradictory facts
    @ivar noise_ratio: probability of replacing a result slot with an
                       off-topic document
    '''
    docs: tuple
    noise_ratio: float = 0.0
    conflict_sets: tuple = ()
    seed: int = 0
    _by_id: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not 0.0 <= self.noise_ratio <= 1.0:
            raise DataValidationError(_('noise_ratio must be in [0, 1], got %s')
                                      % self.noise_ratio)
        by_id = {}
        for d in self.docs:
            if d.doc_id in by_id:
                raise DataValidationError(_('duplicated doc_id %s') % d.doc_id)
            by_id[d.doc_id] = d
        for group in self.conflict_sets:
            for doc_id in group:
                if doc_id not in by_id:
                    raise DataValidationError(_('conflict set references '
                                                'unknown doc_id %s') % doc_id)
        object.__setattr__(self, 'docs', tuple(self.docs))
        object.__setattr__(self, 'conflict_sets',
                           tuple(tuple(g) for g in self.conflict_sets))
        object.__setattr__(self, '_by_id', by_id)

    def get(self, doc_id):
        return self._by_id[doc_id]

    def conflicts_of(self, doc_id):
        ''' Doc ids contradicting C{doc_id}, over all its conflict sets '''
        partners = []
        for group in self.conflict_sets:
            if doc_id in group:
                partners.extend(d for d in group
                                if d != doc_id and d not in partners)
        return partners

    def to_dict(self):
        return {'docs': [{'doc_id': d.doc_id, 'title': d.title,
                          'content': d.content, 'tags': list(d.tags)}
                         for d in self.docs],
                'conflict_sets': [list(g) for g in self.conflict_sets],
                'noise_ratio': self.noise_ratio,
                'seed': self.seed}

    @classmethod
    def from_dict(cls, d, path=None):
        try:
            docs = [SimDoc(x['doc_id'], x.get('title', ''), x['content'],
                           tuple(x.get('tags', [])))
                    for x in d.get('docs', [])]
            return cls(docs, float(d.get('noise_ratio', 0.0)),
                       d.get('conflict_sets', []), int(d.get('seed', 0)))
        except (KeyError, TypeError, ValueError) as e:
            raise DataValidationError(_('invalid corpus: %s') % e, path)

    @classmethod
    def load(cls, path):
        with open(path, encoding='utf-8') as f:
            try:
                data = json.load(f)
            except ValueError as e:
                raise DataValidationError(_('invalid JSON: %s') % e, path)
        try:
            return cls.from_dict(data, path)
        except DataValidationError as e:
            if e.path is None:
                raise DataValidationError(e.msg, path)
            raise


def sim_score(query, doc):
    '''
    Lexical relevance of C{doc} for C{query}: the number of distinct query
    tokens found in the document, damped by the log of the document length.

    @type doc: L{SimDoc}, L{Document} or anything with title and content
    @rtype: float
    '''
    if isinstance(doc, SimDoc):
        doc_tokens = doc.tokens()
    else:
        doc_tokens = tokenize(doc.title + ' ' + doc.content)
    overlap = len(set(tokenize(query)) & set(doc_tokens))
    return overlap / (1 + math.log(1 + len(doc_tokens)))


def rank(corpus, query):
    ''' All documents with a positive score, best first, ties by doc_id '''
    scored = [(sim_score(query, d), d) for d in corpus.docs]
    scored = [x for x in scored if x[0] > 0]
    scored.sort(key=lambda x: (-x[0], x[1].doc_id))
    return [d for s, d in scored]


def inject_adversity(corpus, results, k, queries):
    '''
    Degrade simulated results the way the open web does.

    Every slot is replaced by an off-topic document with probability
    C{corpus.noise_ratio}. Then, for each returned document that belongs to
    a conflict set and whose contradicting partners are all missing, the
    best scoring partner is appended, evicting the last slot not holding the
    triggering document when the list is full. Nothing is injected when
    C{k} < 2.

    @param results: one list of L{SimDoc} per query
    @return: one list of L{SimDoc} per query
    '''
    out = []
    for query, docs in zip(queries, results):
        docs = list(docs)
        rng = seeded_rng(corpus.seed, query)
        if corpus.noise_ratio > 0 and docs:
            off_topic = [d for d in corpus.docs if sim_score(query, d) == 0]
            for i in range(len(docs)):
                # one draw per slot so reruns stay aligned
                if rng.random() < corpus.noise_ratio:
                    candidates = off_topic or \
                        [d for d in corpus.docs if d not in docs]
                    if candidates:
                        docs[i] = candidates[int(rng.integers(len(candidates)))]
        if k >= 2:
            docs = _inject_conflicts(corpus, query, docs, k)
        out.append(docs)
    return out


def _inject_conflicts(corpus, query, docs, k):
    handled = set()
    i = 0
    while i < len(docs):
        doc = docs[i]
        partners = corpus.conflicts_of(doc.doc_id)
        present = set(d.doc_id for d in docs)
        if partners and doc.doc_id not in handled and \
                not any(p in present for p in partners):
            best = sorted(partners, key=lambda p: (
                -sim_score(query, corpus.get(p)), p))[0]
            if len(docs) >= k:
                evict = max(j for j in range(len(docs)) if j != i)
                del docs[evict]
            docs.append(corpus.get(best))
            handled.add(best)
        handled.add(doc.doc_id)
        i += 1
    return docs


class SimulatedSearchBackend(SearchBackend):
    '''
    Deterministic search over a L{SimCorpus}. Results are a pure function
    of the corpus, its seed, the queries and C{k}.
    '''

    kind = SearchKind.SIMULATED

    def __init__(self, corpus, max_doc_chars=DEFAULT_MAX_DOC_CHARS):
        self.corpus = corpus
        self.max_doc_chars = max_doc_chars

    def search(self, queries, k):
        ranked = [rank(self.corpus, q)[:k] for q in queries]
        ranked = inject_adversity(self.corpus, ranked, k, queries)
        return [[Document(d.url, d.title, d.content[:self.max_doc_chars],
                          i + 1, DocumentSource.SIMULATED)
                 for i, d in enumerate(docs)] for docs in ranked]
