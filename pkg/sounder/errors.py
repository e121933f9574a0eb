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


from gettext import gettext as _


class SounderException(Exception):
    header = ''
    msg = ''

    def __init__(self, msg=''):
        self.msg = msg
        Exception.__init__(self, self.header + msg)


class ConfigurationError(SounderException):
    header = 'Configuration Error: '


class UsageError(SounderException):
    header = 'Usage Error: '


class FatalError(SounderException):
    header = 'Fatal Error: '


class DataValidationError(SounderException):
    header = 'Data Validation Error: '

    def __init__(self, msg='', path=None):
        self.path = path
        if path is not None:
            msg = '%s: %s' % (path, msg)
        SounderException.__init__(self, msg)


class BackendError(SounderException):
    header = 'Backend Error: '


class BackendTimeout(BackendError):

    def __init__(self, endpoint, timeout):
        self.endpoint = endpoint
        self.timeout = timeout
        BackendError.__init__(self, _("Request to '%s' timed out after %ss") %
                              (endpoint, timeout))


class HttpStatusError(BackendError):

    def __init__(self, endpoint, code, body=''):
        self.endpoint = endpoint
        self.code = code
        BackendError.__init__(self, _("Request to '%s' failed with HTTP status "
                              "%d %s") % (endpoint, code, body[:200]))


class BackendDecodeError(BackendError):

    def __init__(self, endpoint, message=''):
        self.endpoint = endpoint
        BackendError.__init__(self, _("Could not decode the response from "
                              "'%s': %s") % (endpoint, message))


class ExhaustedScript(BackendError):

    def __init__(self, key):
        self.key = key
        BackendError.__init__(self, _("No scripted turn left for %r") % (key,))


class ParseFailure(SounderException):
    header = 'Parse Failure: '


class QueryLimitExceeded(ParseFailure):

    def __init__(self, count, limit):
        self.count = count
        self.limit = limit
        ParseFailure.__init__(self, _("%d search queries supplied, at most %d "
                              "are allowed") % (count, limit))


class SpanAlignmentError(SounderException):
    header = 'Span Alignment Error: '


class VerdictParseError(SounderException):
    header = 'Verdict Parse Error: '

    def __init__(self, field, text):
        self.field = field
        self.text = text
        SounderException.__init__(self, _("field '%s' not found in judge "
                                  "output: %r") % (field, text[:200]))


class ShapeMismatch(SounderException):
    header = 'Shape Mismatch: '
