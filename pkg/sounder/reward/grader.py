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

from sounder.enums import GraderMode
from sounder.errors import VerdictParseError, BackendError
from sounder.reward import LooseVerdict, StrictVerdict, RewardBreakdown, \
    verdict_reward, extra_search_bonus, format_reward, STRICT_ROUNDS
from sounder.utils import _, load_template, run_in_pool
from sounder.utils import messages as m

LOOSE_TEMPLATE = 'loose_grader'
STRICT_TEMPLATES = ['strict_grader_%d' % (i + 1) for i in range(STRICT_ROUNDS)]

_score_re = re.compile(r'"?得分"?\s*[:：]\s*(-?\d+(?:\.\d+)?)')
_rationale_re = re.compile(r'"?打分理由"?\s*[:：]\s*"([^"]*)"')
_correctness_re = re.compile(r'"?回复正确性"?\s*[:：]\s*["“]?(正确|错误)')


def render_checklist(checklist):
    if not checklist:
        return '无'
    return '\n'.join('- %s' % item for item in checklist)


def render_grading_prompt(template, record, answer, data_dir=None):
    return load_template(template, data_dir).substitute(
        query=record.question, solution=record.solution,
        checklist=render_checklist(record.checklist), response=answer)


def parse_loose(text):
    '''
    Score of a loose grading verdict, rounded and clamped to [1, 10]

    @rtype: L{LooseVerdict}
    @raises VerdictParseError: the score field is missing
    '''
    found = _score_re.findall(text)
    if not found:
        raise VerdictParseError('得分', text)
    score = min(10, max(1, int(round(float(found[-1])))))
    rationale = _rationale_re.findall(text)
    return LooseVerdict(score, rationale[-1] if rationale else '')


def parse_strict(text):
    ''' True when the last correctness field of the verdict says correct '''
    found = _correctness_re.findall(text)
    if not found:
        raise VerdictParseError('回复正确性', text)
    return found[-1] == '正确'


def _ask(judge, prompt, parse, key, context, negative):
    for retry in [False, True]:
        text = judge.judge(prompt, key=key, context=context)
        try:
            return parse(text)
        except VerdictParseError as e:
            if retry:
                m.warning(_('%s, counted as negative') % e)
                return negative
            m.action(_('re-asking the judge: %s') % e)


def grade(record, answer, mode, judge, key=None, data_dir=None):
    '''
    Grades an answer against the reference answer and checklist.

    The loose grader asks the judge once for a 1-10 score. The strict grader
    asks three times with three differently worded prompts and collects one
    correct/wrong judgment from each. A verdict that can not be parsed is
    asked again once and then counted as negative.

    @type record: L{sounder.dataset.QARecord}
    @param answer: the final answer of a rollout
    @type answer: str
    @param mode: L{sounder.enums.GraderMode}
    @type judge: L{sounder.backends.ModelBackend}
    @param key: (record id, attempt) forwarded to the judge
    @rtype: L{sounder.reward.LooseVerdict} or L{sounder.reward.StrictVerdict}
    @raises BackendError: the judge could not be reached
    '''
    context = {'record': record, 'answer': answer, 'mode': mode}
    if mode == GraderMode.LOOSE:
        prompt = render_grading_prompt(LOOSE_TEMPLATE, record, answer,
                                       data_dir)
        return _ask(judge, prompt, parse_loose, key, context,
                    LooseVerdict(1))
    if mode != GraderMode.STRICT:
        raise ValueError('unknown grader mode %r' % mode)
    judgments = []
    for template in STRICT_TEMPLATES:
        prompt = render_grading_prompt(template, record, answer, data_dir)
        judgments.append(_ask(judge, prompt, parse_strict, key, context,
                              False))
    return StrictVerdict(judgments)


def accuracy_of(trajectory, record, mode, judge, data_dir=None):
    '''
    Accuracy reward of a rollout. Rollouts without an answer are not graded
    and judge failures count as wrong.
    '''
    if trajectory.final_answer is None:
        return 0.0, None
    try:
        verdict = grade(record, trajectory.final_answer, mode, judge,
                        (record.id, trajectory.attempt), data_dir)
    except BackendError as e:
        m.warning(_('%s attempt %d could not be graded: %s') %
                  (record.id, trajectory.attempt, e))
        return 0.0, None
    return verdict_reward(verdict), verdict


def score_group(trajectories, record, mode, judge, strict_format=False,
                workers=1, data_dir=None):
    '''
    Rewards of a complete rollout group of one record

    @return: one L{RewardBreakdown} per trajectory, in order
    @rtype: list
    '''
    def _grade(t):
        return lambda: accuracy_of(t, record, mode, judge, data_dir)[0]
    accuracies = run_in_pool([_grade(t) for t in trajectories], workers)
    formats = [format_reward(t, strict_format) for t in trajectories]
    correct = [f * a == 1 for f, a in zip(formats, accuracies)]
    bonuses = extra_search_bonus([(t.used_search, c)
                                  for t, c in zip(trajectories, correct)])
    return [RewardBreakdown.compose(f, a, b)
            for f, a, b in zip(formats, accuracies, bonuses)]
