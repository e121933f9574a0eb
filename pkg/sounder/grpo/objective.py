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

from sounder.errors import ConfigurationError, ShapeMismatch
from sounder.utils import _


@dataclass(frozen=True)
class GRPOConfig:
    group_size: int = 14
    clip_epsilon: float = 0.2
    kl_beta: float = 0.001
    learning_rate: float = 1e-6
    std_guard: float = 1e-6
    batch_size: int = 32

    def __post_init__(self):
        if self.group_size < 2:
            raise ConfigurationError(_('group_size must be at least 2'))
        if not 0 < self.clip_epsilon < 1:
            raise ConfigurationError(_('clip_epsilon must be in (0, 1)'))
        if self.kl_beta < 0:
            raise ConfigurationError(_('kl_beta must be >= 0'))
        if self.std_guard <= 0:
            raise ConfigurationError(_('std_guard must be positive'))
        if self.batch_size < 1:
            raise ConfigurationError(_('batch_size must be at least 1'))

    @classmethod
    def from_config(cls, config, **overrides):
        values = dict(group_size=config.group_size,
                      clip_epsilon=config.clip_epsilon,
                      kl_beta=config.kl_beta,
                      learning_rate=config.learning_rate,
                      std_guard=config.std_guard,
                      batch_size=config.batch_size)
        values.update(overrides)
        return cls(**values)


def log_softmax(logits):
    z = logits - logits.max(axis=-1, keepdims=True)
    return z - np.log(np.exp(z).sum(axis=-1, keepdims=True))


@dataclass(frozen=True, eq=False)
class ToyPolicy:
    '''
    Tabular softmax policy over (state, action) pairs.

    @ivar logits: (n_states, n_actions) table being trained
    @ivar ref_logits: frozen reference table the KL term is measured against
    '''
    logits: np.ndarray
    ref_logits: np.ndarray = None

    def __post_init__(self):
        logits = np.array(self.logits, dtype=float)
        ref = logits if self.ref_logits is None else \
            np.array(self.ref_logits, dtype=float)
        if logits.ndim != 2 or logits.shape != ref.shape:
            raise ShapeMismatch(_('policy and reference tables differ in '
                                  'shape'))
        logits.setflags(write=False)
        ref.setflags(write=False)
        object.__setattr__(self, 'logits', logits)
        object.__setattr__(self, 'ref_logits', ref)

    @classmethod
    def uniform(cls, n_states, n_actions):
        return cls(np.zeros((n_states, n_actions)))

    @property
    def n_actions(self):
        return self.logits.shape[1]

    def probs(self, state):
        return np.exp(log_softmax(self.logits[state]))

    def log_probs(self, states, actions, reference=False):
        table = self.ref_logits if reference else self.logits
        states = np.asarray(states, dtype=int)
        actions = np.asarray(actions, dtype=int)
        return log_softmax(table[states])[np.arange(len(states)), actions]

    def sample(self, state, rng):
        return int(rng.choice(self.n_actions, p=self.probs(state)))


def apply_update(policy, gradient, learning_rate):
    ''' Plain gradient step, returning a new policy '''
    return ToyPolicy(policy.logits - learning_rate * np.asarray(gradient),
                     policy.ref_logits)


def compute_advantages(rewards, std_guard=1e-6):
    '''
    Standardizes rewards within their group, using the population standard
    deviation. Degenerate groups (std below C{std_guard}) get all zeros.

    @type rewards: list of float
    @rtype: L{numpy.ndarray}
    '''
    r = np.asarray(rewards, dtype=float)
    if len(r) < 2:
        raise ValueError('a group needs at least 2 rewards')
    std = r.std()
    if std < std_guard:
        return np.zeros_like(r)
    return (r - r.mean()) / std


@dataclass(eq=False)
class RolloutGroup:
    '''
    Rollouts of one question with everything the objective needs.

    Per rollout, C{token_states} and C{token_actions} locate each token in
    the policy table, C{token_logprobs_old}/C{token_logprobs_ref} are its
    log-probabilities under the sampling and reference policies and
    C{loss_mask} is True for model generated tokens.

    The recorded reference log-probabilities only feed the sampled KL
    estimate; the penalty in the loss is computed from the reference table.
    '''
    rewards: list
    token_states: list
    token_actions: list
    token_logprobs_old: list
    token_logprobs_ref: list
    loss_mask: list
    advantages: np.ndarray = field(default=None)

    def __post_init__(self):
        g = len(self.rewards)
        per_rollout = [self.token_states, self.token_actions,
                       self.token_logprobs_old, self.token_logprobs_ref,
                       self.loss_mask]
        if any(len(x) != g for x in per_rollout):
            raise ShapeMismatch(_('every per-rollout list must hold %d '
                                  'entries') % g)
        for i in range(g):
            lengths = set(len(x[i]) for x in per_rollout)
            if len(lengths) != 1:
                raise ShapeMismatch(_('rollout %d: token lists differ in '
                                      'length %s') % (i, sorted(lengths)))

    @property
    def size(self):
        return len(self.rewards)

    def compute_advantages(self, std_guard):
        self.advantages = compute_advantages(self.rewards, std_guard)
        return self.advantages


@dataclass(frozen=True, eq=False)
class ObjectiveResult:
    loss: float
    gradient: np.ndarray
    kl: float
    clip_fraction: float
    sampled_kl: float = 0.0


def grpo_objective(group, policy, config):
    '''
    Clipped surrogate objective with an exact KL penalty.

    Each rollout contributes the mean over its unmasked tokens of
    C{-min(ratio * A, clip(ratio, 1 - eps, 1 + eps) * A) + beta * KL}, and
    the group loss is the mean over rollouts. Rollouts without unmasked
    tokens contribute nothing. The gradient only flows through unmasked
    token positions.

    C{sampled_kl} estimates the same divergence from the recorded
    C{token_logprobs_ref} of the sampled tokens. It is reported for
    monitoring only and takes no part in the loss.

    @type group: L{RolloutGroup}
    @type policy: L{ToyPolicy}
    @type config: L{GRPOConfig}
    @rtype: L{ObjectiveResult}
    '''
    if group.advantages is None:
        raise ValueError('advantages have not been computed')
    if len(group.advantages) != group.size:
        raise ShapeMismatch(_('%d advantages for %d rollouts') %
                            (len(group.advantages), group.size))
    eps = config.clip_epsilon
    beta = config.kl_beta
    g = group.size
    grad = np.zeros_like(policy.logits)
    loss = 0.0
    kl_total = 0.0
    kl_count = 0
    clipped_count = 0
    sampled_kl_total = 0.0

    for i in range(g):
        mask = np.asarray(group.loss_mask[i], dtype=bool)
        n = int(mask.sum())
        if n == 0:
            continue
        states = np.asarray(group.token_states[i], dtype=int)[mask]
        actions = np.asarray(group.token_actions[i], dtype=int)[mask]
        old = np.asarray(group.token_logprobs_old[i], dtype=float)[mask]
        ref = np.asarray(group.token_logprobs_ref[i], dtype=float)[mask]
        adv = float(group.advantages[i])

        logp = log_softmax(policy.logits[states])
        logq = log_softmax(policy.ref_logits[states])
        p = np.exp(logp)
        lp = logp[np.arange(n), actions]
        ratio = np.exp(lp - old)
        unclipped = ratio * adv
        clipped = np.clip(ratio, 1 - eps, 1 + eps) * adv
        surrogate = np.minimum(unclipped, clipped)
        kl = (p * (logp - logq)).sum(axis=1)

        loss += (-surrogate.mean() + beta * kl.mean()) / g
        kl_total += kl.sum()
        kl_count += n
        clipped_count += int((clipped < unclipped).sum())
        log_ratio = ref - lp
        sampled_kl_total += float((np.exp(log_ratio) - log_ratio - 1).sum())

        # d surrogate / d logprob, zero where the clipped branch is active
        d_lp = np.where(unclipped <= clipped, ratio * adv, 0.0)
        onehot = np.zeros_like(p)
        onehot[np.arange(n), actions] = 1.0
        d_logits = -d_lp[:, None] * (onehot - p)
        d_logits += beta * p * (logp - logq - kl[:, None])
        np.add.at(grad, states, d_logits / (n * g))

    return ObjectiveResult(float(loss), grad,
                           kl_total / kl_count if kl_count else 0.0,
                           clipped_count / kl_count if kl_count else 0.0,
                           sampled_kl_total / kl_count if kl_count else 0.0)


def grpo_loss(group, policy, config):
    '''
    @return: the loss and its gradient over the policy logits
    @rtype: tuple
    '''
    result = grpo_objective(group, policy, config)
    return result.loss, result.gradient
