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

import random
import unittest

from sounder.agent.action import Search, Answer, format_turn
from sounder.agent.episode import AgentConfig, run_episode, run_episodes, \
    merge_results
from sounder.agent.prompt import ROLE_HEADER_TPL, TURN_END, REJECT_SEARCH_MSG
from sounder.agent.trajectory import Trajectory
from sounder.backends import ModelBackend
from sounder.backends.scripted import ScriptedBackend
from sounder.enums import Provenance, TerminatedBy
from sounder.errors import ExhaustedScript, BackendError
from sounder.search import Document, SearchBackend, NullSearchBackend
from test.test_common import DATA_DIR, make_record, answer_turn, \
    search_turn, FixedSearchBackend


class RecordingModel(ModelBackend):
    ''' Replays turns and remembers what it was last shown '''

    def __init__(self, turns):
        ModelBackend.__init__(self)
        self.turns = list(turns)
        self.messages = None
        self.returned = []

    def complete(self, messages, key=None):
        self.messages = list(messages)
        if not self.turns:
            raise ExhaustedScript(key)
        turn = self.turns.pop(0)
        self.returned.append(turn)
        return turn


class FailingSearchBackend(SearchBackend):

    def search(self, queries, k):
        raise BackendError('search is down')


class RunEpisodeTest(unittest.TestCase):

    def setUp(self):
        self.record = make_record()
        self.config = AgentConfig()

    def run_script(self, turns, search=None, config=None):
        return run_episode(self.record, ScriptedBackend(turns),
                           search or FixedSearchBackend(),
                           config or self.config, data_dir=DATA_DIR)

    def testImmediateAnswer(self):
        t = self.run_script([answer_turn('Danube')])
        self.assertEqual(len(t.rounds), 1)
        self.assertFalse(t.used_search)
        self.assertEqual(t.final_answer, 'Danube')
        self.assertEqual(t.terminated_by, TerminatedBy.ANSWERED)

    def testRoundCap(self):
        t = self.run_script([search_turn(['q%d' % i]) for i in range(7)])
        self.assertEqual(len(t.rounds), 7)
        self.assertEqual(t.terminated_by, TerminatedBy.ROUND_CAP)
        self.assertIsNone(t.final_answer)
        self.assertTrue(t.used_search)

    def testSearchThenAnswer(self):
        search = FixedSearchBackend(per_query=3)
        t = self.run_script([search_turn(['a', 'b']), answer_turn('Danube')],
                            search)
        self.assertEqual(len(t.rounds), 2)
        self.assertTrue(t.used_search)
        self.assertEqual(search.calls, [(['a', 'b'], 2)])
        expected = search.search(['a', 'b'], 2)
        self.assertEqual(list(t.rounds[0].documents),
                         expected[0][:2] + expected[1][:2])
        self.assertEqual(t.rounds[1].documents, ())
        self.assertEqual(t.search_rounds(), 1)
        self.assertEqual(t.search_queries(), 2)

    def testDuplicateUrlsDropped(self):
        t = self.run_script([search_turn(['a', 'a']), answer_turn('x')])
        self.assertEqual(len(t.rounds[0].documents), 2)

    def testBackendError(self):
        t = self.run_script([search_turn(['a'])])
        self.assertEqual(t.terminated_by, TerminatedBy.BACKEND_ERROR)
        self.assertIsNone(t.final_answer)
        self.assertEqual(len(t.rounds), 1)

    def testSearchBackendError(self):
        t = self.run_script([search_turn(['a']), answer_turn('x')],
                            FailingSearchBackend())
        self.assertEqual(t.terminated_by, TerminatedBy.BACKEND_ERROR)
        self.assertEqual(t.rounds, ())

    def testParseFailure(self):
        t = self.run_script([search_turn(['a']), 'no tags'])
        self.assertEqual(t.terminated_by, TerminatedBy.PARSE_FAILURE)
        self.assertEqual(len(t.rounds), 1)
        self.assertEqual(t.token_spans[-2].text, 'no tags')
        self.assertEqual(t.token_spans[-2].provenance, Provenance.MODEL)

    def testSearchRejectedOnce(self):
        config = AgentConfig(allow_search=False)
        t = self.run_script([search_turn(['a']), answer_turn('x')],
                            NullSearchBackend(), config)
        self.assertEqual(t.terminated_by, TerminatedBy.ANSWERED)
        self.assertEqual(len(t.rounds), 1)
        self.assertFalse(t.used_search)
        self.assertIn(REJECT_SEARCH_MSG, t.transcript())

    def testSearchRejectedTwice(self):
        config = AgentConfig(allow_search=False)
        t = self.run_script([search_turn(['a']), search_turn(['b']),
                             answer_turn('x')], NullSearchBackend(), config)
        self.assertEqual(t.terminated_by, TerminatedBy.SEARCH_REJECTED)
        self.assertIsNone(t.final_answer)
        self.assertEqual(t.rounds, ())

    def testFirstMessageIsSystemPrompt(self):
        model = RecordingModel([answer_turn('x')])
        run_episode(self.record, model, FixedSearchBackend(), self.config,
                    data_dir=DATA_DIR)
        role, text = model.messages[0]
        self.assertEqual(role, 'system')
        self.assertIn(self.record.question, text)

    def testDeterministic(self):
        turns = [search_turn(['a', 'b']), search_turn(['c']),
                 answer_turn('x')]
        first = self.run_script(turns)
        second = self.run_script(turns)
        self.assertEqual(first, second)
        self.assertEqual(first.to_dict(), second.to_dict())

    def testDumpRoundTrip(self):
        t = self.run_script([search_turn(['a', 'b']), answer_turn('x')])
        self.assertEqual(Trajectory.from_dict(t.to_dict()), t)

    def testConcurrentEpisodes(self):
        records = [make_record('r%d' % i) for i in range(8)]
        script = {'*': [search_turn(['a']), answer_turn('x')]}
        jobs = [(r, a) for r in records for a in range(2)]
        sequential = run_episodes(jobs, ScriptedBackend(script),
                                  FixedSearchBackend(), self.config, 1,
                                  DATA_DIR)
        parallel = run_episodes(jobs, ScriptedBackend(script),
                                FixedSearchBackend(), self.config, 4,
                                DATA_DIR)
        self.assertEqual(sequential, parallel)
        self.assertEqual([(t.record_id, t.attempt) for t in parallel],
                         [(r.id, a) for r, a in jobs])


class MergeResultsTest(unittest.TestCase):

    def testQueryOrderFirstUrlWins(self):
        a = Document('u1', 'a', 'a')
        b = Document('u2', 'b', 'b')
        c = Document('u1', 'c', 'c')
        self.assertEqual(merge_results([[a, b], [c]]), [a, b])
        self.assertEqual(merge_results([[b], [c, a]]), [b, c])


class EpisodeFuzzTest(unittest.TestCase):

    EPISODES = 10000

    def random_turn(self, rng):
        roll = rng.random()
        if roll < 0.6:
            queries = ['q%d' % rng.randrange(6)
                       for i in range(rng.randint(1, 7))]
            return format_turn('search %d' % rng.randrange(100),
                               Search(queries))
        if roll < 0.9:
            return format_turn('answer', Answer('a%d' % rng.randrange(10)))
        return rng.choice(['broken', '<thinking>x', '<thinking></thinking>',
                           "<thinking>x</thinking>web_search|{'x': 1}"])

    def testEpisodeDiscipline(self):
        rng = random.Random(1234)
        config = AgentConfig()
        record = make_record()
        search = FixedSearchBackend(per_query=3)
        for i in range(self.EPISODES):
            turns = [self.random_turn(rng)
                     for j in range(rng.randint(0, 10))]
            model = RecordingModel(turns)
            t = run_episode(record, model, search, config, i, DATA_DIR)

            self.assertLessEqual(len(t.rounds), config.max_rounds)
            for r in t.rounds:
                if isinstance(r.action, Search):
                    self.assertLessEqual(len(r.documents),
                                         2 * len(r.action.queries))
                    self.assertLessEqual(len(r.action.queries), 5)
            if t.rounds and isinstance(t.rounds[-1].action, Answer):
                self.assertEqual(t.terminated_by, TerminatedBy.ANSWERED)
            for r in t.rounds[:-1]:
                self.assertIsInstance(r.action, Search)

            messages = list(model.messages)
            if len(model.returned) > len([m for m in messages
                                          if m[0] == 'assistant']):
                messages.append(('assistant', model.returned[-1]))
            expected = ''.join(ROLE_HEADER_TPL % role + text + TURN_END
                               for role, text in messages)
            self.assertEqual(t.transcript(), expected)
            self.assertEqual([s.text for s in t.token_spans
                              if s.provenance == Provenance.MODEL],
                             model.returned)


if __name__ == '__main__':
    unittest.main()
