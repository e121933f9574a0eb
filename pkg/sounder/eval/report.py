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

import csv
import os

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt

from sounder.eval.evaluate import RecordOutcome
from sounder.grpo.trainer import pearson
from sounder.utils import ensure_dir, write_json

SUMMARY_FIELDS = ['source', 'metric', 'value']


def write_report_json(report, path):
    write_json(report.to_dict(), path)


def write_outcomes_csv(outcomes, path):
    ensure_dir(os.path.dirname(path))
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(RecordOutcome.CSV_FIELDS)
        for o in outcomes:
            writer.writerow(o.to_row())


def plot_training_log(log, path):
    '''
    Plots the reward, the search-call rate and the KL divergence of every
    training step.

    @type log: L{sounder.grpo.trainer.TrainingLog}
    '''
    ensure_dir(os.path.dirname(path))
    steps = log.series('step')
    fig, axes = plt.subplots(1, 3, figsize=(12, 3.6), constrained_layout=True)
    for ax, name, title in zip(axes,
                               ['mean_reward', 'search_rate', 'kl'],
                               ['Reward', 'Search-call rate', 'KL']):
        ax.plot(steps, log.series(name), marker='.')
        ax.set_title(title)
        ax.set_xlabel('Step')
        ax.grid(True, alpha=0.3)
    fig.savefig(path, dpi=100)
    plt.close(fig)


def plot_accuracy(report, path):
    ''' Bar chart of the accuracy of every evaluation subset '''
    ensure_dir(os.path.dirname(path))
    names = ['All'] + sorted(report['per_subset'])
    values = [report['accuracy']] + \
        [report['per_subset'][k]['accuracy'] for k in names[1:]]
    fig, ax = plt.subplots(figsize=(6, 3.6), constrained_layout=True)
    ax.bar(names, values)
    ax.set_ylim(0.0, 1.0)
    ax.set_ylabel('Accuracy')
    ax.grid(True, axis='y', alpha=0.3)
    fig.savefig(path, dpi=100)
    plt.close(fig)


def summary_rows(log=None, report=None):
    rows = []
    if log is not None and log.steps:
        for name in ['mean_reward', 'search_rate', 'accuracy', 'kl']:
            series = log.series(name)
            rows.append(['training', 'initial_%s' % name, series[0]])
            rows.append(['training', 'final_%s' % name, series[-1]])
        rows.append(['training', 'reward_search_rate_pearson',
                     pearson(log.series('mean_reward'),
                             log.series('search_rate'))])
    if report is not None:
        for name in ['accuracy', 'avg_search_rounds', 'avg_search_queries',
                     'n']:
            rows.append(['eval', name, report[name]])
        for subset in sorted(report['per_subset']):
            for name, value in report['per_subset'][subset].items():
                rows.append(['eval', '%s.%s' % (subset, name), value])
    return rows


def write_summary_csv(path, log=None, report=None):
    '''
    Writes the headline numbers of a training log and of an evaluation
    report, given as the dict of its JSON file
    '''
    ensure_dir(os.path.dirname(path))
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(SUMMARY_FIELDS)
        writer.writerows(summary_rows(log, report))
