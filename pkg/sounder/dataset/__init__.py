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

from collections import OrderedDict
from dataclasses import dataclass

from sounder.enums import Category, Difficulty
from sounder.errors import DataValidationError
from sounder.utils import _, read_jsonl, write_jsonl

FIELDS = ['id', 'question', 'solution', 'checklist', 'category',
          'difficulty', 'language']


@dataclass(frozen=True)
class QARecord:
    '''
    A question with its reference answer

    @ivar checklist: grading requirements; entries starting with C{alias:}
                     list accepted alternative answers
    @ivar difficulty: tag given by the tagging pipeline, None until tagged
    '''
    id: str
    question: str
    solution: str
    checklist: tuple = ()
    category: str = Category.OTHER
    difficulty: str = None
    language: str = 'zh'

    def __post_init__(self):
        object.__setattr__(self, 'checklist', tuple(self.checklist))
        if not self.id:
            raise ValueError('record id must not be empty')
        if not self.question or not self.solution:
            raise ValueError('question and solution must not be empty')
        if self.category not in Category.all():
            raise ValueError('unknown category %r' % self.category)
        if self.difficulty is not None and \
                self.difficulty not in Difficulty.all():
            raise ValueError('unknown difficulty %r' % self.difficulty)

    def with_difficulty(self, difficulty):
        return QARecord(self.id, self.question, self.solution, self.checklist,
                        self.category, difficulty, self.language)

    def to_dict(self):
        d = OrderedDict()
        d['id'] = self.id
        d['question'] = self.question
        d['solution'] = self.solution
        d['checklist'] = list(self.checklist)
        d['category'] = self.category
        d['difficulty'] = self.difficulty
        d['language'] = self.language
        return d

    @classmethod
    def from_dict(cls, d):
        unknown = set(d) - set(FIELDS)
        if unknown:
            raise ValueError('unknown fields %s' % ', '.join(sorted(unknown)))
        checklist = d.get('checklist') or []
        if not isinstance(checklist, list):
            raise ValueError('checklist must be a list')
        return cls(str(d['id']), d['question'], d['solution'], checklist,
                   d.get('category') or Category.OTHER, d.get('difficulty'),
                   d.get('language') or 'zh')


def load_records(path):
    '''
    Load records from a line-delimited JSON file

    @raises DataValidationError: malformed line, invalid or duplicated record
    '''
    records = []
    seen = set()
    for i, entry in enumerate(read_jsonl(path), 1):
        try:
            record = QARecord.from_dict(entry)
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise DataValidationError(_('record %d: %s') % (i, e), path)
        if record.id in seen:
            raise DataValidationError(_('duplicated record id %s') %
                                      record.id, path)
        seen.add(record.id)
        records.append(record)
    return records


def save_records(records, path):
    write_jsonl([r.to_dict() for r in records], path)


def tag_difficulty(n_correct):
    '''
    Difficulty from the number of correct answers out of 4 attempts

    @type n_correct: int
    @rtype: str
    @raises DataValidationError: n_correct outside [0, 4]
    '''
    if isinstance(n_correct, bool) or not isinstance(n_correct, int) or \
            not 0 <= n_correct <= 4:
        raise DataValidationError(_('n_correct must be an integer in [0, 4], '
                                    'got %r') % (n_correct,))
    if n_correct == 4:
        return Difficulty.EASY
    if n_correct >= 2:
        return Difficulty.MEDIUM
    if n_correct == 1:
        return Difficulty.HARD
    return Difficulty.OUTLIER


from sounder.dataset.tagging import run_tagging, ATTEMPTS  # noqa: E402
from sounder.dataset.mixture import MixtureSpec, select_mixture  # noqa: E402
