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

import unittest

import numpy as np

from sounder.agent.episode import AgentConfig, run_episode
from sounder.enums import TerminatedBy
from sounder.errors import ConfigurationError
from sounder.grpo import GRPOConfig, ToyPolicy, ToySeekEnv, ToyTask, \
    ToyPolicyBackend, ToySearchBackend, TrainingLog, train_toy, pearson
from sounder.grpo.toy import OPAQUE_STATE, SEARCH_ACTION
from sounder.grpo.trainer import decode_trajectory
from sounder.reward import ScheduleConfig
from test.test_common import TempDirMixin


def forced_policy(env, search_first):
    ''' Always searches (or guesses answer_1) from the start states and
    answers correctly once informed '''
    logits = np.full((env.n_states, env.n_actions), -30.0)
    for task in range(len(env.tasks)):
        logits[env.start_state(task), SEARCH_ACTION if search_first else 1] = 0
    for a in range(1, env.n_answers + 1):
        logits[env.informed_state(a), a] = 0.0
    return ToyPolicy(logits)


class ToyEnvTest(unittest.TestCase):

    def testGenerate(self):
        env = ToySeekEnv.generate(20, 3, 0.8, seed=3)
        self.assertEqual(len(env.tasks), 20)
        self.assertAlmostEqual(env.unanswerable_ratio(), 0.8)
        hidden = [t.answer for t in env.tasks if not t.answerable]
        self.assertEqual(sorted(set(hidden)), [1, 2, 3])
        self.assertEqual(env, ToySeekEnv.generate(20, 3, 0.8, seed=3))
        self.assertEqual(env.n_states, 3 + 3 + 20)
        self.assertEqual(env.n_actions, 4)

    def testStates(self):
        env = ToySeekEnv([ToyTask(2, False), ToyTask(1, True)], 2)
        self.assertEqual(env.start_state(0), OPAQUE_STATE)
        self.assertEqual(env.start_state(1), 3 + 2 + 1)
        self.assertEqual(env.turn_state(0, 2), env.informed_state(2))
        self.assertEqual(env.task_of('toy-1'), 1)
        self.assertEqual(env.record(0).solution, 'answer_2')

    def testInvalid(self):
        self.assertRaises(ConfigurationError, ToySeekEnv, [ToyTask(4, True)],
                          3)
        self.assertRaises(ConfigurationError, ToySeekEnv.generate, 5, 3, 1.5)

    def testSearchBackend(self):
        env = ToySeekEnv([ToyTask(2, False)], 2)
        results = ToySearchBackend(env).search(['toy task 0', 'toy task 9'],
                                               1)
        self.assertEqual(results[0][0].content, 'answer_2')
        self.assertEqual(results[1], [])


class ToyRolloutTest(unittest.TestCase):

    def setUp(self):
        self.env = ToySeekEnv([ToyTask(2, False), ToyTask(3, True)], 3)
        self.config = AgentConfig(top_k_per_query=1)

    def testSearchThenAnswer(self):
        model = ToyPolicyBackend(self.env, forced_policy(self.env, True))
        t = run_episode(self.env.record(0), model, ToySearchBackend(self.env),
                        self.config)
        self.assertEqual(t.terminated_by, TerminatedBy.ANSWERED)
        self.assertEqual(t.final_answer, 'answer_2')
        self.assertEqual(t.search_rounds(), 1)

        states, actions, mask = decode_trajectory(t, self.env, self.config)
        self.assertEqual(len(states), len(mask))
        trained = [(s, a) for s, a, keep in zip(states, actions, mask) if keep]
        self.assertEqual(trained, [(OPAQUE_STATE, SEARCH_ACTION),
                                   (self.env.informed_state(2), 2)])

    def testGuess(self):
        model = ToyPolicyBackend(self.env, forced_policy(self.env, False))
        t = run_episode(self.env.record(0), model, ToySearchBackend(self.env),
                        self.config)
        self.assertEqual(t.final_answer, 'answer_1')
        self.assertFalse(t.used_search)

    def testSamplingIsKeyed(self):
        env = ToySeekEnv.generate(6, 3, 0.5, seed=1)
        policy = ToyPolicy.uniform(env.n_states, env.n_actions)
        search = ToySearchBackend(env)
        first = [run_episode(env.record(i), ToyPolicyBackend(env, policy, 5),
                             search, self.config, a)
                 for i in range(6) for a in range(3)]
        second = [run_episode(env.record(i), ToyPolicyBackend(env, policy, 5),
                              search, self.config, a)
                  for i in reversed(range(6)) for a in reversed(range(3))]
        second.reverse()
        self.assertEqual(first, second)


class TrainToyTest(TempDirMixin, unittest.TestCase):

    def setUp(self):
        TempDirMixin.setUp(self)
        self.env = ToySeekEnv.generate(20, 3, 0.8, seed=3)
        self.config = GRPOConfig(group_size=14, learning_rate=1.0,
                                 batch_size=4)

    def testDeterministic(self):
        a = train_toy(self.env, self.config, 4, seed=11)
        b = train_toy(self.env, self.config, 4, seed=11, workers=3)
        self.assertEqual(a.steps, b.steps)
        np.testing.assert_array_equal(a.policy.logits, b.policy.logits)
        c = train_toy(self.env, self.config, 4, seed=12)
        self.assertNotEqual(a.steps, c.steps)

    def testLogFields(self):
        log = train_toy(self.env, self.config, 2, seed=0,
                        schedule=ScheduleConfig(1))
        self.assertEqual(log.series('step'), [0, 1])
        self.assertEqual(log.series('grader'), ['loose', 'strict'])
        for entry in log.steps:
            self.assertTrue(0.0 <= entry['search_rate'] <= 1.0)
            self.assertTrue(0.0 <= entry['accuracy'] <= 1.0)
            self.assertTrue(entry['kl'] >= 0.0)
            self.assertTrue(entry['sampled_kl'] >= 0.0)
        self.assertEqual(log.steps[0]['sampled_kl'], 0.0)
        log.save(self.path('log.jsonl'))
        self.assertEqual(TrainingLog.load(self.path('log.jsonl')).steps,
                         log.steps)

    def testSearchRateAndRewardRiseTogether(self):
        log = train_toy(self.env, self.config, 50, seed=0)
        reward = log.series('mean_reward')
        rate = log.series('search_rate')
        self.assertGreater(np.mean(reward[-10:]), np.mean(reward[:10]))
        self.assertGreater(np.mean(rate[-10:]), np.mean(rate[:10]))
        self.assertGreater(pearson(reward, rate), 0.0)
        # the reference table stays where training started
        np.testing.assert_array_equal(log.policy.ref_logits, 0.0)


class PearsonTest(unittest.TestCase):

    def testPearson(self):
        self.assertAlmostEqual(pearson([1, 2, 3], [2, 4, 6]), 1.0)
        self.assertAlmostEqual(pearson([1, 2, 3], [3, 2, 1]), -1.0)
        self.assertEqual(pearson([1, 1, 1], [1, 2, 3]), 0.0)
        self.assertEqual(pearson([1], [1]), 0.0)


if __name__ == '__main__':
    unittest.main()
