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

from sounder.enums import Provenance
from sounder.errors import SpanAlignmentError
from sounder.utils import _


class Tokenizer:
    '''
    Base class for tokenizers used to build loss masks.

    A per-span tokenizer is applied to every provenance span on its own, so
    no token can straddle two spans. Otherwise the whole transcript is
    tokenized at once and every token must fall inside a single span.
    '''

    per_span = True

    def tokenize(self, text):
        raise NotImplementedError

    def offsets(self, text):
        ''' (start, end) character offsets of the tokens of C{text} '''
        result = []
        pos = 0
        for token in self.tokenize(text):
            if text[pos:pos + len(token)] != token:
                raise SpanAlignmentError(_('tokens do not reproduce the text '
                                           'at offset %d') % pos)
            result.append((pos, pos + len(token)))
            pos += len(token)
        if pos != len(text):
            raise SpanAlignmentError(_('tokens do not cover the text'))
        return result


class RegexTokenizer(Tokenizer):
    ''' Lossless tokenizer splitting words, whitespace runs and symbols '''

    _token_re = re.compile(r'\w+|\s+|[^\w\s]')

    def __init__(self, per_span=True):
        self.per_span = per_span

    def tokenize(self, text):
        return self._token_re.findall(text)


class SpanTokenizer(Tokenizer):
    ''' One token per non-empty span '''

    def tokenize(self, text):
        return [text] if text else []


def tokenize_spans(spans, tokenizer):
    '''
    Tokenizes provenance spans

    @return: (token, provenance) pairs in transcript order
    @rtype: list
    @raises SpanAlignmentError: a token straddles a provenance boundary
    '''
    tokens = []
    if tokenizer.per_span:
        for span in spans:
            for start, end in tokenizer.offsets(span.text):
                tokens.append((span.text[start:end], span.provenance))
        return tokens

    text = ''.join(s.text for s in spans)
    bounds = []
    pos = 0
    for span in spans:
        bounds.append((pos, pos + len(span.text), span.provenance))
        pos += len(span.text)
    i = 0
    for start, end in tokenizer.offsets(text):
        while bounds[i][1] <= start:
            i += 1
        if end > bounds[i][1]:
            raise SpanAlignmentError(_('token %r at offset %d straddles a '
                                       'provenance boundary') %
                                     (text[start:end], start))
        tokens.append((text[start:end], bounds[i][2]))
    return tokens


def provenance_mask(trajectory, tokenizer):
    '''
    Loss mask of a trajectory: True for every token the model generated,
    False for prompt and retrieved tokens.

    @type trajectory: L{sounder.agent.trajectory.Trajectory}
    @type tokenizer: L{Tokenizer}
    @rtype: list of bool
    '''
    return [prov == Provenance.MODEL
            for token, prov in tokenize_spans(trajectory.token_spans,
                                              tokenizer)]
