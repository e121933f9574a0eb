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

from sounder.eval.evaluate import RecordOutcome, EvalReport, evaluate, \
    aggregate
from sounder.eval.isolation import isolation_filter, pass_at_k
from sounder.eval.behaviors import BehaviorCounts, behavior_stats


__all__ = ['RecordOutcome', 'EvalReport', 'evaluate', 'aggregate',
           'isolation_filter', 'pass_at_k', 'BehaviorCounts',
           'behavior_stats']
