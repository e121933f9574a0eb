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

from sounder.enums import Category, Difficulty
from sounder.errors import ConfigurationError
from sounder.utils import _, seeded_rng
from sounder.utils import messages as m


@dataclass(frozen=True)
class MixtureSpec:
    '''
    Number of records wanted per (category, difficulty) cell. Cells missing
    from C{targets} get 0.
    '''
    targets: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        for (category, difficulty), n in self.targets.items():
            if category not in Category.all():
                raise ConfigurationError(_("unknown category '%s' in mixture")
                                         % category)
            if difficulty not in Difficulty.all():
                raise ConfigurationError(_("unknown difficulty '%s' in "
                                           "mixture") % difficulty)
            if not isinstance(n, int) or n < 0:
                raise ConfigurationError(_('mixture target for %s/%s must be '
                                           'a non-negative integer') %
                                         (category, difficulty))

    @classmethod
    def from_config(cls, targets, seed=0):
        '''
        @param targets: {category: {difficulty: count}}
        @type targets: dict
        '''
        flat = {}
        for category, cells in (targets or {}).items():
            for difficulty, n in cells.items():
                flat[(category, difficulty)] = n
        return cls(flat, seed)

    def target(self, category, difficulty):
        return self.targets.get((category, difficulty), 0)


def select_mixture(records, spec):
    '''
    Samples records per (category, difficulty) cell without replacement.

    Selected records keep their input order. Cells with fewer records than
    wanted are taken whole and reported as shortfalls.

    @type spec: L{MixtureSpec}
    @return: the selected records and {(category, difficulty): missing}
    @rtype: tuple
    '''
    records = list(records)
    cells = {}
    for i, r in enumerate(records):
        cells.setdefault((r.category, r.difficulty), []).append(i)

    selected = set()
    shortfalls = {}
    for cell in sorted(spec.targets):
        want = spec.target(*cell)
        available = cells.get(cell, [])
        if want == 0:
            continue
        if want >= len(available):
            if want > len(available):
                shortfalls[cell] = want - len(available)
                m.warning(_('only %d records available for %s/%s, %d wanted')
                          % (len(available), cell[0], cell[1], want))
            selected.update(available)
            continue
        rng = seeded_rng(spec.seed, cell[0], cell[1])
        picked = rng.choice(len(available), size=want, replace=False)
        selected.update(available[int(p)] for p in picked)
    return [records[i] for i in sorted(selected)], shortfalls
