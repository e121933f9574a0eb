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

from sounder.agent.trajectory import Span
from sounder.enums import Provenance
from sounder.utils import load_template


SEARCH_TEMPLATE = 'iterative_rag'
NO_SEARCH_TEMPLATE = 'iterative_rag_nosearch'

ROLE_HEADER_TPL = '<|%s|>\n'
TURN_END = '\n'
RESULTS_HEADER = 'Search results:\n'
NO_RESULTS = '(no results)\n'
DOCUMENT_TPL = '[%d] Title: %s\nContent: %s\nURL: %s\n'
REJECT_SEARCH_MSG = ('Web search is not available for this question. Answer '
                     'directly from your own knowledge: close the thinking '
                     'part and write the final answer without any tool call.')


def render_system_prompt(question, allow_search=True, data_dir=None):
    name = SEARCH_TEMPLATE if allow_search else NO_SEARCH_TEMPLATE
    return load_template(name, data_dir).substitute(query=question)


def render_document_spans(documents, offset=0):
    '''
    Render retrieved documents as numbered blocks. Framing text is tagged
    as prompt and every block as retrieved content.

    @param documents: documents in retrieval order
    @type documents: list
    @param offset: number of documents shown in earlier turns
    @type offset: int
    @rtype: list of L{Span}
    '''
    spans = [Span(RESULTS_HEADER, Provenance.PROMPT)]
    if not documents:
        spans.append(Span(NO_RESULTS, Provenance.PROMPT))
    for i, doc in enumerate(documents):
        block = DOCUMENT_TPL % (offset + i + 1, doc.title, doc.content, doc.url)
        spans.append(Span(block, Provenance.RETRIEVED))
    return spans


def render_next_prompt(history, new_documents, allow_search=True,
                       data_dir=None):
    '''
    Renders the next prompt of an episode.

    With an empty history this is the system prompt with the question filled
    in. Otherwise it is the user message carrying the documents retrieved by
    the last round of C{history}, numbered after those of earlier rounds.

    @type history: L{sounder.agent.trajectory.History}
    @param new_documents: documents retrieved in the last round
    @type new_documents: list
    @rtype: str
    '''
    if not history.rounds:
        return render_system_prompt(history.question, allow_search, data_dir)
    offset = sum(len(r.documents) for r in history.rounds[:-1])
    return ''.join(s.text for s in
                   render_document_spans(new_documents, offset))
