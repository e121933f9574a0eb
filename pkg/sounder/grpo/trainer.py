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

from dataclasses import dataclass, field

import numpy as np

from sounder.agent.action import parse_turn
from sounder.agent.episode import AgentConfig, run_episodes
from sounder.agent.prompt import ROLE_HEADER_TPL
from sounder.agent.provenance import SpanTokenizer, tokenize_spans
from sounder.backends.oracle import OracleJudgeBackend
from sounder.enums import GraderMode, Provenance
from sounder.errors import ParseFailure, UsageError
from sounder.grpo.objective import ToyPolicy, RolloutGroup, grpo_objective, \
    apply_update
from sounder.grpo.toy import ToyPolicyBackend, ToySearchBackend, \
    PROMPT_STATE, OBSERVATION_STATE
from sounder.reward import ScheduleConfig, reward_mode_at
from sounder.reward.grader import score_group
from sounder.utils import _, seeded_rng, read_jsonl, write_jsonl
from sounder.utils import messages as m

USER_HEADER = ROLE_HEADER_TPL % 'user'


@dataclass
class TrainingLog:
    '''
    Per-step training metrics

    @ivar steps: one dict per step with step, grader, mean_reward,
                 search_rate, mean_search_rounds, accuracy, kl, loss and
                 clip_fraction
    @ivar policy: policy after the last step
    '''
    steps: list = field(default_factory=list)
    policy: ToyPolicy = field(default=None, compare=False, repr=False)

    def series(self, name):
        return [s[name] for s in self.steps]

    def save(self, path):
        write_jsonl(self.steps, path)

    @classmethod
    def load(cls, path):
        return cls(read_jsonl(path))


def pearson(xs, ys):
    ''' Pearson correlation, 0 when either series is constant '''
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if len(x) < 2 or x.std() == 0 or y.std() == 0:
        return 0.0
    return float(np.corrcoef(x, y)[0, 1])


def decode_trajectory(trajectory, env, agent_config):
    '''
    Locates every token of a toy trajectory in the policy table.

    @return: states, actions and loss mask, one entry per token
    @rtype: tuple
    '''
    task = env.task_of(trajectory.record_id)
    revealed = None
    states, actions, mask = [], [], []
    for text, prov in tokenize_spans(trajectory.token_spans, SpanTokenizer()):
        if prov == Provenance.MODEL:
            try:
                action = env.action_of(parse_turn(text, agent_config)[1])
            except (ParseFailure, ValueError):
                states.append(PROMPT_STATE)
                actions.append(0)
                mask.append(False)
                continue
            states.append(env.turn_state(task, revealed))
            actions.append(action)
            mask.append(True)
        elif prov == Provenance.RETRIEVED:
            revealed = env.revealed_answer(text)
            states.append(OBSERVATION_STATE)
            actions.append(revealed or 0)
            mask.append(False)
        else:
            if text == USER_HEADER:
                revealed = None
            states.append(PROMPT_STATE)
            actions.append(0)
            mask.append(False)
    return states, actions, mask


def build_group(trajectories, breakdowns, env, policy, agent_config,
                std_guard):
    fields = ([], [], [], [], [])
    for t in trajectories:
        states, actions, mask = decode_trajectory(t, env, agent_config)
        fields[0].append(states)
        fields[1].append(actions)
        fields[2].append(policy.log_probs(states, actions))
        fields[3].append(policy.log_probs(states, actions, reference=True))
        fields[4].append(mask)
    group = RolloutGroup([b.total for b in breakdowns], *fields)
    group.compute_advantages(std_guard)
    return group


def train_toy(env, config, steps, seed, agent_config=None, schedule=None,
              strict_format=False, workers=1):
    '''
    Trains a tabular policy on C{env} with GRPO.

    Every step samples a batch of tasks, runs C{config.group_size} episodes
    per task through the agent loop, rewards them with the oracle judge
    (relaxed matching while the schedule is in its loose phase, exact
    matching afterwards) including the search bonus, and applies one
    gradient step on the averaged group objective.

    @type env: L{sounder.grpo.toy.ToySeekEnv}
    @type config: L{sounder.grpo.objective.GRPOConfig}
    @param steps: optimization steps
    @type steps: int
    @param seed: seed of every random draw of the run
    @type seed: int
    @rtype: L{TrainingLog}
    '''
    if steps < 1:
        raise UsageError(_('steps must be at least 1'))
    if agent_config is None:
        agent_config = AgentConfig(top_k_per_query=1)
    if schedule is None:
        schedule = ScheduleConfig(0)
    policy = ToyPolicy.uniform(env.n_states, env.n_actions)
    search = ToySearchBackend(env)
    records = env.records()
    log = TrainingLog()

    for step in range(steps):
        rng = seeded_rng(seed, 'batch', step)
        size = min(config.batch_size, len(records))
        batch = [records[int(i)] for i in
                 rng.choice(len(records), size=size, replace=False)]
        mode = reward_mode_at(step, schedule)
        judge = OracleJudgeBackend(relaxed=mode == GraderMode.LOOSE)
        model = ToyPolicyBackend(env, policy, seed, step)
        jobs = [(r, g) for r in batch for g in range(config.group_size)]
        trajectories = run_episodes(jobs, model, search, agent_config,
                                    workers)

        loss = 0.0
        kl = 0.0
        sampled_kl = 0.0
        clip_fraction = 0.0
        grad = np.zeros_like(policy.logits)
        rewards = []
        accuracies = []
        for i, record in enumerate(batch):
            group_trajs = trajectories[i * config.group_size:
                                       (i + 1) * config.group_size]
            breakdowns = score_group(group_trajs, record, mode, judge,
                                     strict_format)
            group = build_group(group_trajs, breakdowns, env, policy,
                                agent_config, config.std_guard)
            result = grpo_objective(group, policy, config)
            loss += result.loss / len(batch)
            kl += result.kl / len(batch)
            sampled_kl += result.sampled_kl / len(batch)
            clip_fraction += result.clip_fraction / len(batch)
            grad += result.gradient / len(batch)
            rewards.extend(b.total for b in breakdowns)
            accuracies.extend(b.format * b.accuracy for b in breakdowns)
        policy = apply_update(policy, grad, config.learning_rate)

        entry = {'step': step,
                 'grader': mode,
                 'mean_reward': float(np.mean(rewards)),
                 'search_rate': float(np.mean([t.used_search
                                               for t in trajectories])),
                 'mean_search_rounds': float(np.mean([t.search_rounds()
                                                      for t in trajectories])),
                 'accuracy': float(np.mean(accuracies)),
                 'kl': float(kl),
                 'sampled_kl': float(sampled_kl),
                 'loss': float(loss),
                 'clip_fraction': float(clip_fraction)}
        log.steps.append(entry)
        m.step(step + 1, steps, 'train-toy', 'reward %.3f search rate %.3f' %
               (entry['mean_reward'], entry['search_rate']))
    log.policy = policy
    return log
