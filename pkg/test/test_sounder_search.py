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
import math
import os
import unittest

from sounder import search as search_env
from sounder.enums import DocumentSource
from sounder.errors import UsageError, DataValidationError, \
    BackendDecodeError, ConfigurationError, HttpStatusError
from sounder.search import NullSearchBackend
from sounder.search.simulated import SimDoc, SimCorpus, \
    SimulatedSearchBackend, inject_adversity, rank, sim_score, tokenize
from sounder.search.web import WebSearchBackend
from test.test_common import StubServer, TempDirMixin

DOCS = [SimDoc('d1', 'Danube river', 'The Danube flows through Vienna'),
        SimDoc('d2', 'Danube claim', 'The Danube flows through Paris'),
        SimDoc('d3', 'Rhine river', 'The Rhine flows through Basel'),
        SimDoc('d4', 'Cooking pasta', 'Boil water and add salt')]


def corpus(noise_ratio=0.0, conflict_sets=(), seed=0):
    return SimCorpus(DOCS, noise_ratio, conflict_sets, seed)


class SearchTest(unittest.TestCase):

    def testQueryBounds(self):
        backend = NullSearchBackend()
        self.assertRaises(UsageError, search_env.search, [], 2, backend)
        self.assertRaises(UsageError, search_env.search,
                          ['q'] * 6, 2, backend)
        self.assertRaises(UsageError, search_env.search, ['q'], 0, backend)
        self.assertEqual(search_env.search(['a', 'b'], 2, backend), [[], []])

    def testTopK(self):
        backend = SimulatedSearchBackend(corpus())
        results = search_env.search(['flows through', 'pasta'], 1, backend)
        self.assertEqual([len(r) for r in results], [1, 1])
        self.assertEqual(results[1][0].url, 'sim://d4')


class SimulatedSearchTest(unittest.TestCase):

    def testTokenize(self):
        self.assertEqual(tokenize('Hello, World-wide!'),
                         ['hello', 'world', 'wide'])

    def testScoreOfSingleToken(self):
        doc = SimDoc('x', '', 'Danube')
        self.assertAlmostEqual(sim_score('danube', doc),
                               1 / (1 + math.log(2)))

    def testScoreDampsByLength(self):
        docs = [SimDoc('d1', '', 'danube'),
                SimDoc('d2', 'Danube', 'river danube'),
                SimDoc('d3', 'Vienna', 'capital of Austria'),
                SimDoc('d4', 'River', 'the Rhine river flows north'),
                SimDoc('d5', '', 'Danube, danube; DANUBE river')]
        # (shared distinct tokens, document length in tokens)
        counts = {'d1': (1, 1), 'd2': (2, 3), 'd3': (0, 4),
                  'd4': (1, 6), 'd5': (2, 4)}
        query = 'Danube river river'
        for doc in docs:
            overlap, length = counts[doc.doc_id]
            self.assertAlmostEqual(sim_score(query, doc),
                                   overlap / (1 + math.log(1 + length)),
                                   msg=doc.doc_id)
        self.assertEqual([d.doc_id for d in rank(SimCorpus(docs), query)],
                         ['d2', 'd5', 'd1', 'd4'])

    def testCleanCorpusLeavesResultsAlone(self):
        results = [[DOCS[0], DOCS[2]], [DOCS[3]], []]
        out = inject_adversity(corpus(), results, 2,
                               ['Vienna river', 'pasta', 'quantum'])
        self.assertEqual(out, results)

    def testRankSkipsIrrelevant(self):
        ranked = rank(corpus(), 'Vienna river')
        self.assertEqual([d.doc_id for d in ranked], ['d1', 'd3'])
        self.assertEqual(rank(corpus(), 'quantum'), [])
        self.assertEqual(sim_score('quantum', DOCS[0]), 0)

    def testRankTiesByDocId(self):
        docs = [SimDoc('b', 'x', 'same words'), SimDoc('a', 'x', 'same words')]
        self.assertEqual([d.doc_id for d in rank(SimCorpus(docs), 'same')],
                         ['a', 'b'])

    def testDocuments(self):
        backend = SimulatedSearchBackend(corpus(), max_doc_chars=5)
        docs = backend.search(['Vienna river'], 2)[0]
        self.assertEqual([d.url for d in docs], ['sim://d1', 'sim://d3'])
        self.assertEqual([d.rank for d in docs], [1, 2])
        self.assertEqual(docs[0].content, 'The D')
        self.assertEqual(docs[0].source, DocumentSource.SIMULATED)

    def testConflictInjected(self):
        backend = SimulatedSearchBackend(corpus(conflict_sets=[['d1', 'd2']]))
        docs = backend.search(['Vienna river'], 2)[0]
        self.assertEqual([d.url for d in docs], ['sim://d1', 'sim://d2'])
        docs = backend.search(['Vienna river'], 3)[0]
        self.assertEqual([d.url for d in docs],
                         ['sim://d1', 'sim://d3', 'sim://d2'])

    def testNoConflictBelowTwoSlots(self):
        backend = SimulatedSearchBackend(corpus(conflict_sets=[['d1', 'd2']]))
        docs = backend.search(['Vienna river'], 1)[0]
        self.assertEqual([d.url for d in docs], ['sim://d1'])

    def testNoise(self):
        backend = SimulatedSearchBackend(corpus(noise_ratio=1.0))
        for query in ['Vienna river', 'Rhine Basel', 'flows']:
            docs = backend.search([query], 2)[0]
            self.assertTrue(docs)
            for d in docs:
                self.assertEqual(sim_score(query, d), 0)

    def testDeterministic(self):
        c = corpus(noise_ratio=0.5, conflict_sets=[['d1', 'd2']], seed=3)
        first = SimulatedSearchBackend(c).search(['Vienna river', 'flows'], 2)
        second = SimulatedSearchBackend(c).search(['Vienna river', 'flows'],
                                                  2)
        self.assertEqual(first, second)

    def testCorpusValidation(self):
        self.assertRaises(DataValidationError, SimCorpus, DOCS, 1.5)
        self.assertRaises(DataValidationError, SimCorpus,
                          DOCS + [SimDoc('d1', 't', 'c')])
        self.assertRaises(DataValidationError, SimCorpus, DOCS, 0.0,
                          [['d1', 'missing']])

    def testConflictsOf(self):
        c = corpus(conflict_sets=[['d1', 'd2'], ['d1', 'd3']])
        self.assertEqual(c.conflicts_of('d1'), ['d2', 'd3'])
        self.assertEqual(c.conflicts_of('d4'), [])


class CorpusFileTest(TempDirMixin, unittest.TestCase):

    def testLoad(self):
        c = corpus(0.25, [['d1', 'd2']], 9)
        path = self.path('corpus.json')
        with open(path, 'w') as f:
            json.dump(c.to_dict(), f)
        self.assertEqual(SimCorpus.load(path), c)

    def testLoadInvalid(self):
        path = self.path('corpus.json')
        with open(path, 'w') as f:
            json.dump({'docs': [{'doc_id': 'a'}]}, f)
        with self.assertRaises(DataValidationError) as cm:
            SimCorpus.load(path)
        self.assertEqual(cm.exception.path, path)

    def testFromConfig(self):
        path = self.path('corpus.json')
        with open(path, 'w') as f:
            json.dump(corpus().to_dict(), f)
        backend = search_env.from_config({'kind': 'simulated',
                                          'corpus': path}, 10)
        self.assertIsInstance(backend, SimulatedSearchBackend)
        self.assertEqual(backend.max_doc_chars, 10)
        self.assertIsInstance(search_env.from_config(None), NullSearchBackend)
        self.assertIsInstance(search_env.from_config({'kind': 'none'}),
                              NullSearchBackend)
        self.assertRaises(ConfigurationError, search_env.from_config,
                          {'kind': 'library'})


class WebSearchTest(unittest.TestCase):

    HITS = {'data': {'webPages': {'value': [
        {'name': 'T1', 'snippet': 'S1', 'url': 'u1'},
        {'name': 'T2', 'snippet': '', 'url': 'u2'},
        {'name': 'T3', 'snippet': 'long snippet', 'url': 'u3'},
        {'name': 'T4', 'snippet': 'S4', 'url': 'u4'}]}}}

    def testMapping(self):
        with StubServer(lambda body: (200, json.dumps(self.HITS))) as stub:
            backend = WebSearchBackend(stub.url, max_doc_chars=4)
            results = backend.search(['q1', 'q2'], 2)
        self.assertEqual(stub.requests, [{'query': 'q1', 'count': 2},
                                         {'query': 'q2', 'count': 2}])
        docs = results[0]
        self.assertEqual([(d.url, d.title, d.content, d.rank) for d in docs],
                         [('u1', 'T1', 'S1', 1), ('u3', 'T3', 'long', 2)])
        self.assertEqual(docs[0].source, DocumentSource.WEB)

    def testCustomFields(self):
        body = {'results': [{'headline': 'H', 'text': 'T', 'link': 'L'}]}
        with StubServer(lambda b: (200, json.dumps(body))) as stub:
            backend = WebSearchBackend(stub.url, results_path='results',
                                       title_field='headline',
                                       content_field='text', url_field='link')
            docs = backend.search(['q'], 2)[0]
        self.assertEqual((docs[0].url, docs[0].title, docs[0].content),
                         ('L', 'H', 'T'))

    def testMissingResults(self):
        with StubServer(lambda b: (200, '{"data": {}}')) as stub:
            backend = WebSearchBackend(stub.url)
            self.assertRaises(BackendDecodeError, backend.search, ['q'], 2)

    def testRetries(self):
        answers = [(503, 'busy'), (429, 'slow down'),
                   (200, json.dumps(self.HITS))]
        with StubServer(lambda b: answers.pop(0)) as stub:
            backend = WebSearchBackend(stub.url, backoff=0.0)
            docs = backend.search(['q'], 1)[0]
        self.assertEqual([d.url for d in docs], ['u1'])
        self.assertEqual(len(stub.requests), 3)

        with StubServer(lambda b: (403, 'denied')) as stub:
            backend = WebSearchBackend(stub.url, backoff=0.0)
            with self.assertRaises(HttpStatusError) as cm:
                backend.search(['q'], 1)
        self.assertEqual(cm.exception.code, 403)
        self.assertEqual(len(stub.requests), 1)

    def testApiKeyFromEnvironment(self):
        os.environ['SOUNDER_TEST_SEARCH_KEY'] = 'token'
        try:
            with StubServer(lambda b: (200, json.dumps(self.HITS))) as stub:
                WebSearchBackend(stub.url,
                                 api_key_env='SOUNDER_TEST_SEARCH_KEY') \
                    .search(['q'], 1)
        finally:
            del os.environ['SOUNDER_TEST_SEARCH_KEY']
        self.assertEqual(stub.headers[0].get('Authorization'),
                         'Bearer token')


if __name__ == '__main__':
    unittest.main()
