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


class _Enum:

    @classmethod
    def all(cls):
        return [v for k, v in vars(cls).items()
                if k.isupper() and isinstance(v, str)]


class Provenance(_Enum):
    ''' Origin of a piece of the episode transcript '''
    PROMPT = 'prompt'
    MODEL = 'model'
    RETRIEVED = 'retrieved'


class TerminatedBy(_Enum):
    ''' Enumeration of the reasons an episode ends '''
    ANSWERED = 'answered'
    ROUND_CAP = 'round_cap_exceeded'
    BACKEND_ERROR = 'backend_error'
    PARSE_FAILURE = 'parse_failure'
    SEARCH_REJECTED = 'search_rejected'


class DocumentSource(_Enum):
    WEB = 'web'
    SIMULATED = 'simulated'


class Category(_Enum):
    ''' Enumeration of question categories '''
    CROSS_PAGE_QA = 'CrossPageQA'
    OPEN_RIDDLE = 'OpenRiddle'
    WIKI_RIDDLE = 'WikiRiddle'
    OTHER = 'Other'

    @staticmethod
    def subset(category):
        '''Returns the breakdown subset a category is reported under.
        Open and wiki riddles are reported together.'''
        if category in [Category.OPEN_RIDDLE, Category.WIKI_RIDDLE]:
            return 'Open&WikiRiddle'
        return category


class Difficulty(_Enum):
    ''' Enumeration of difficulty tags, from pass@4 of the tagging model '''
    EASY = 'Easy'
    MEDIUM = 'Medium'
    HARD = 'Hard'
    OUTLIER = 'Outlier'

    @staticmethod
    def subset(difficulty):
        if difficulty in [Difficulty.EASY, Difficulty.MEDIUM]:
            return 'Easy&Medium'
        if difficulty in [Difficulty.HARD, Difficulty.OUTLIER]:
            return 'Hard&Outlier'
        return None


class GraderMode(_Enum):
    LOOSE = 'loose'
    STRICT = 'strict'


class BackendKind(_Enum):
    HTTP_CHAT = 'http'
    SCRIPTED = 'scripted'
    ORACLE = 'oracle'


class SearchKind(_Enum):
    WEB = 'web'
    SIMULATED = 'simulated'
    NONE = 'none'


class Behavior(_Enum):
    ''' Information-seeking behaviors counted in reasoning chains '''
    REFLECTION_CORRECTION = 'reflection_correction'
    CONFLICT_RESOLUTION = 'conflict_resolution'
    VERIFICATION_DENOISING = 'verification_denoising'
