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

import os
import shutil
import tempfile

from sounder.agent.action import Search, Answer, format_turn
from sounder.dataset import QARecord
from sounder.enums import Category
from sounder.search import Document, SearchBackend
from sounder.utils import find_data_dir

DATA_DIR = find_data_dir()
TEST_DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')
GOLDEN_DIR = os.path.join(TEST_DATA_DIR, 'golden')


class DummyConfig(object):
    seed = 0
    workers = 1
    output_dir = ''
    data_dir = DATA_DIR
    max_rounds = 7
    max_queries_per_round = 5
    top_k_per_query = 2
    sampling_temperature = 0.9
    truncate_queries = True
    max_doc_chars = 2000
    group_size = 14
    clip_epsilon = 0.2
    kl_beta = 0.001
    learning_rate = 1e-6
    std_guard = 1e-6
    batch_size = 32


def make_record(id='r1', question='Which river crosses the city?',
                solution='Danube', checklist=(), category=Category.OTHER,
                difficulty=None):
    return QARecord(id, question, solution, checklist, category, difficulty)


def answer_turn(text, reasoning='I know this'):
    return format_turn(reasoning, Answer(text))


def search_turn(queries, reasoning='I need to look this up'):
    return format_turn(reasoning, Search(queries))


class FixedSearchBackend(SearchBackend):
    ''' Returns C{per_query} documents for every query, with unique URLs '''

    def __init__(self, per_query=3):
        self.per_query = per_query
        self.calls = []

    def search(self, queries, k):
        self.calls.append((list(queries), k))
        return [[Document('http://example.com/%s/%d' % (q, i), 'Doc %s %d' %
                          (q, i), 'Content about %s' % q, i + 1)
                 for i in range(self.per_query)] for q in queries]


class TempDirMixin():

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp, ignore_errors=True)

    def path(self, *names):
        return os.path.join(self.tmp, *names)


class StubServer(object):
    '''
    In-process HTTP server answering POST requests with C{handler(body)},
    which returns (status, text). Every decoded request body is logged.
    '''

    def __init__(self, handler):
        import json
        import threading
        from http.server import ThreadingHTTPServer, BaseHTTPRequestHandler

        stub = self
        self.handler = handler
        self.requests = []
        self.headers = []
        self._lock = threading.Lock()

        class Handler(BaseHTTPRequestHandler):

            def do_POST(self):
                length = int(self.headers.get('Content-Length', 0))
                body = json.loads(self.rfile.read(length).decode('utf-8'))
                with stub._lock:
                    stub.requests.append(body)
                    stub.headers.append(dict(self.headers))
                status, text = stub.handler(body)
                data = text.encode('utf-8')
                self.send_response(status)
                self.send_header('Content-Type', 'application/json')
                self.send_header('Content-Length', str(len(data)))
                self.end_headers()
                self.wfile.write(data)

            def log_message(self, format, *args):
                pass

        self.server = ThreadingHTTPServer(('127.0.0.1', 0), Handler)
        self.thread = threading.Thread(target=self.server.serve_forever,
                                       daemon=True)

    @property
    def url(self):
        return 'http://127.0.0.1:%d/' % self.server.server_address[1]

    def __enter__(self):
        self.thread.start()
        return self

    def __exit__(self, *args):
        self.server.shutdown()
        self.server.server_close()
