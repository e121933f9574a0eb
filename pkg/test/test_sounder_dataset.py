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
import unittest

from sounder.agent.episode import AgentConfig
from sounder.backends.oracle import OracleJudgeBackend
from sounder.backends.scripted import ScriptedBackend
from sounder.dataset import QARecord, load_records, save_records, \
    tag_difficulty, run_tagging, MixtureSpec, select_mixture, ATTEMPTS
from sounder.enums import Category, Difficulty
from sounder.errors import DataValidationError, ConfigurationError, \
    BackendError
from sounder.search import NullSearchBackend
from test.test_common import DATA_DIR, TempDirMixin, make_record, answer_turn


class DownJudge(OracleJudgeBackend):

    def judge(self, prompt, key=None, context=None):
        raise BackendError('judge is down')


class DifficultyTest(unittest.TestCase):

    def testTable(self):
        expected = [Difficulty.OUTLIER, Difficulty.HARD, Difficulty.MEDIUM,
                    Difficulty.MEDIUM, Difficulty.EASY]
        self.assertEqual([tag_difficulty(n) for n in range(5)], expected)

    def testOutOfRange(self):
        for n in [-1, 5, 2.0, True, None]:
            self.assertRaises(DataValidationError, tag_difficulty, n)


class RecordsTest(TempDirMixin, unittest.TestCase):

    def write(self, lines):
        path = self.path('records.jsonl')
        with open(path, 'w', encoding='utf-8') as f:
            for line in lines:
                f.write(line if isinstance(line, str) else
                        json.dumps(line, ensure_ascii=False))
                f.write('\n')
        return path

    def testLoadSave(self):
        records = [make_record('a', checklist=['alias: Donau'],
                               category=Category.CROSS_PAGE_QA),
                   make_record('b', question='哪条河？', solution='多瑙河',
                               difficulty=Difficulty.HARD)]
        save_records(records, self.path('out.jsonl'))
        self.assertEqual(load_records(self.path('out.jsonl')), records)
        with open(self.path('out.jsonl'), encoding='utf-8') as f:
            first = f.readline()
        self.assertTrue(first.startswith('{"id": "a", "question": '))
        self.assertIn('多瑙河', open(self.path('out.jsonl'),
                                  encoding='utf-8').read())

    def testDefaults(self):
        path = self.write([{'id': 7, 'question': 'Q', 'solution': 'A'}])
        record = load_records(path)[0]
        self.assertEqual(record.id, '7')
        self.assertEqual(record.category, Category.OTHER)
        self.assertIsNone(record.difficulty)
        self.assertEqual(record.checklist, ())

    def testInvalid(self):
        cases = [['not json'],
                 [{'question': 'Q', 'solution': 'A'}],
                 [{'id': 'a', 'question': '', 'solution': 'A'}],
                 [{'id': 'a', 'question': 'Q', 'solution': 'A',
                   'category': 'Poetry'}],
                 [{'id': 'a', 'question': 'Q', 'solution': 'A',
                   'difficulty': 'Trivial'}],
                 [{'id': 'a', 'question': 'Q', 'solution': 'A',
                   'checklist': 'x'}],
                 [{'id': 'a', 'question': 'Q', 'solution': 'A', 'extra': 1}],
                 [{'id': 'a', 'question': 'Q', 'solution': 'A'},
                  {'id': 'a', 'question': 'Q2', 'solution': 'A2'}]]
        for lines in cases:
            path = self.write(lines)
            with self.assertRaises(DataValidationError) as cm:
                load_records(path)
            self.assertIn(path, str(cm.exception))

    def testBlankLinesSkipped(self):
        path = self.write([{'id': 'a', 'question': 'Q', 'solution': 'A'}, '',
                           {'id': 'b', 'question': 'Q', 'solution': 'A'}])
        self.assertEqual([r.id for r in load_records(path)], ['a', 'b'])


class TaggingTest(unittest.TestCase):

    def setUp(self):
        self.records = [make_record('r%d' % n) for n in range(5)]
        turns = {}
        # record rN answers correctly in its first N attempts
        for n in range(5):
            for a in range(ATTEMPTS):
                turns['r%d#%d' % (n, a)] = [answer_turn(
                    'Danube' if a < n else 'Rhine')]
        turns['r4#3'] = [answer_turn('danube!')]
        self.model = ScriptedBackend(turns)
        self.config = AgentConfig()

    def testTagging(self):
        audit = []
        tagged, entries = run_tagging(self.records, self.config, self.model,
                                      NullSearchBackend(),
                                      OracleJudgeBackend(), workers=4,
                                      audit=audit, data_dir=DATA_DIR)
        self.assertEqual([r.difficulty for r in tagged],
                         [Difficulty.OUTLIER, Difficulty.HARD,
                          Difficulty.MEDIUM, Difficulty.MEDIUM,
                          Difficulty.EASY])
        self.assertEqual([r.id for r in tagged], [r.id for r in self.records])
        self.assertEqual(len(entries), 5 * ATTEMPTS)
        self.assertEqual([(e['id'], e['attempt']) for e in entries],
                         [('r%d' % n, a) for n in range(5)
                          for a in range(ATTEMPTS)])
        self.assertEqual(sorted(audit, key=lambda e: (e['id'], e['attempt'])),
                         entries)
        self.assertEqual(entries[0], {'id': 'r0', 'attempt': 0,
                                      'answer': 'Rhine',
                                      'judgments': [False, False, False],
                                      'correct': False})
        self.assertEqual(entries[-1]['judgments'], [True, True, True])

    def testUnansweredAndJudgeFailures(self):
        model = ScriptedBackend({'*': ['no tags at all']})
        tagged, entries = run_tagging(self.records[:1], self.config, model,
                                      NullSearchBackend(),
                                      OracleJudgeBackend(), data_dir=DATA_DIR)
        self.assertEqual(tagged[0].difficulty, Difficulty.OUTLIER)
        self.assertEqual(entries[0]['answer'], None)
        self.assertEqual(entries[0]['judgments'], [])

        tagged, entries = run_tagging(self.records[4:], self.config,
                                      self.model, NullSearchBackend(),
                                      DownJudge(), data_dir=DATA_DIR)
        self.assertEqual(tagged[0].difficulty, Difficulty.OUTLIER)
        self.assertTrue(all(not e['correct'] for e in entries))


class MixtureTest(unittest.TestCase):

    def setUp(self):
        self.records = []
        for i in range(10):
            self.records.append(make_record(
                'c%d' % i, category=Category.CROSS_PAGE_QA,
                difficulty=Difficulty.EASY if i < 6 else Difficulty.HARD))
        for i in range(3):
            self.records.append(make_record(
                'w%d' % i, category=Category.WIKI_RIDDLE,
                difficulty=Difficulty.MEDIUM))

    def testSelect(self):
        spec = MixtureSpec.from_config({
            Category.CROSS_PAGE_QA: {Difficulty.EASY: 2,
                                     Difficulty.HARD: 4},
            Category.WIKI_RIDDLE: {Difficulty.MEDIUM: 5}}, seed=3)
        selected, shortfalls = select_mixture(self.records, spec)
        ids = [r.id for r in selected]
        self.assertEqual(len([i for i in ids if i in
                              ['c0', 'c1', 'c2', 'c3', 'c4', 'c5']]), 2)
        self.assertEqual([i for i in ids if i in ['c6', 'c7', 'c8', 'c9']],
                         ['c6', 'c7', 'c8', 'c9'])
        self.assertEqual([i for i in ids if i.startswith('w')],
                         ['w0', 'w1', 'w2'])
        self.assertEqual(shortfalls,
                         {(Category.WIKI_RIDDLE, Difficulty.MEDIUM): 2})
        order = [r.id for r in self.records]
        self.assertEqual(ids, sorted(ids, key=order.index))
        self.assertEqual(select_mixture(self.records, spec)[0], selected)

    def testEmptySpec(self):
        self.assertEqual(select_mixture(self.records, MixtureSpec()),
                         ([], {}))

    def testInvalidSpec(self):
        self.assertRaises(ConfigurationError, MixtureSpec.from_config,
                          {'Poetry': {Difficulty.EASY: 1}})
        self.assertRaises(ConfigurationError, MixtureSpec.from_config,
                          {Category.CROSS_PAGE_QA: {'Trivial': 1}})
        self.assertRaises(ConfigurationError, MixtureSpec.from_config,
                          {Category.CROSS_PAGE_QA: {Difficulty.EASY: -1}})


if __name__ == '__main__':
    unittest.main()
