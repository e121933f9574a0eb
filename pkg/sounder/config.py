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

from sounder import backends, search
from sounder.agent.episode import AgentConfig
from sounder.dataset.mixture import MixtureSpec
from sounder.enums import BackendKind, SearchKind
from sounder.errors import ConfigurationError
from sounder.grpo.objective import GRPOConfig
from sounder.reward import ScheduleConfig
from sounder.utils import _, parse_file, find_data_dir, determine_num_of_cpus
from sounder.utils import messages as m


CONFIG_DIR = os.path.expanduser('~/.sounder')
CONFIG_EXT = 'sdc'
DEFAULT_CONFIG_FILENAME = 'sounder.%s' % CONFIG_EXT
DEFAULT_CONFIG_FILE = os.path.join(CONFIG_DIR, DEFAULT_CONFIG_FILENAME)
DEFAULT_OUTPUT_DIR = 'sounder-out'

DEFAULT_API_KEY_ENVS = {
    'model_backend': 'SOUNDER_MODEL_API_KEY',
    'baseline_backend': 'SOUNDER_MODEL_API_KEY',
    'judge_backend': 'SOUNDER_JUDGE_API_KEY',
    'search_backend': 'SOUNDER_SEARCH_API_KEY',
}


class Config (object):

    _properties = ['seed', 'workers', 'output_dir', 'data_dir',
                   'max_rounds', 'max_queries_per_round', 'top_k_per_query',
                   'sampling_temperature', 'truncate_queries',
                   'max_doc_chars', 'group_size', 'clip_epsilon', 'kl_beta',
                   'learning_rate', 'std_guard', 'batch_size', 'toy_steps',
                   'toy_tasks', 'toy_answers', 'toy_unanswerable_ratio',
                   'toy_learning_rate', 'toy_batch_size', 'toy_switch_step',
                   'switch_step', 'strict_format', 'model_backend',
                   'judge_backend', 'search_backend', 'baseline_backend',
                   'eval_runs', 'isolation_k', 'mixture_targets',
                   'mixture_seed']

    def __init__(self):
        for a in self._properties:
            setattr(self, a, None)

    def load(self, filenames=None):
        # First load the default configuration
        self.load_defaults()

        # Next parse the main configuration file
        self._load_main_config()

        # Next, if config files are provided use them to override the
        # settings from the main configuration file
        self._load_cmd_config(filenames)

        self._validate_properties()

    def load_defaults(self):
        self.set_property('seed', 0)
        self.set_property('workers', determine_num_of_cpus())
        self.set_property('output_dir', os.path.abspath(DEFAULT_OUTPUT_DIR))
        self.set_property('data_dir', find_data_dir())
        self.set_property('max_rounds', 7)
        self.set_property('max_queries_per_round', 5)
        self.set_property('top_k_per_query', 2)
        self.set_property('sampling_temperature', 0.9)
        self.set_property('truncate_queries', True)
        self.set_property('max_doc_chars', 2000)
        self.set_property('group_size', 14)
        self.set_property('clip_epsilon', 0.2)
        self.set_property('kl_beta', 0.001)
        self.set_property('learning_rate', 1e-6)
        self.set_property('std_guard', 1e-6)
        self.set_property('batch_size', 32)
        self.set_property('toy_steps', 50)
        self.set_property('toy_tasks', 20)
        self.set_property('toy_answers', 3)
        self.set_property('toy_unanswerable_ratio', 0.8)
        self.set_property('toy_learning_rate', 1.0)
        self.set_property('toy_batch_size', 4)
        self.set_property('toy_switch_step', 0)
        self.set_property('switch_step', 80)
        self.set_property('strict_format', False)
        self.set_property('judge_backend', {'kind': BackendKind.ORACLE})
        self.set_property('search_backend', {'kind': SearchKind.NONE})
        self.set_property('eval_runs', 3)
        self.set_property('isolation_k', 3)
        self.set_property('mixture_targets', {})
        self.set_property('mixture_seed', 0)

    def set_property(self, name, value, force=False):
        if name not in self._properties:
            raise ConfigurationError('Unknown key %s' % name)
        if force or getattr(self, name) is None:
            setattr(self, name, value)

    def agent_config(self, **overrides):
        return AgentConfig.from_config(self, **overrides)

    def grpo_config(self, **overrides):
        return GRPOConfig.from_config(self, **overrides)

    def toy_grpo_config(self):
        return self.grpo_config(learning_rate=self.toy_learning_rate,
                                batch_size=self.toy_batch_size)

    def schedule(self):
        return ScheduleConfig(self.switch_step)

    def toy_schedule(self):
        return ScheduleConfig(self.toy_switch_step)

    def mixture_spec(self):
        return MixtureSpec.from_config(self.mixture_targets,
                                       self.mixture_seed)

    def model(self):
        return self._backend('model_backend', self.sampling_temperature)

    def baseline(self):
        return self._backend('baseline_backend', self.sampling_temperature)

    def judge(self):
        return self._backend('judge_backend', 0.0)

    def search(self):
        return search.from_config(self._with_key_env('search_backend'),
                                  self.max_doc_chars)

    def _backend(self, name, temperature):
        if getattr(self, name) is None:
            raise ConfigurationError(_('%s is not configured') % name)
        return backends.from_config(self._with_key_env(name), temperature)

    def _with_key_env(self, name):
        settings = getattr(self, name)
        if settings is None:
            return None
        settings = dict(settings)
        if settings.get('kind') in [BackendKind.HTTP_CHAT, SearchKind.WEB]:
            settings.setdefault('api_key_env', DEFAULT_API_KEY_ENVS[name])
        return settings

    def _parse(self, filename, reset=True):
        config = {'os': os, '__file__': filename}
        if not reset:
            for prop in self._properties:
                if hasattr(self, prop):
                    config[prop] = getattr(self, prop)

        try:
            parse_file(filename, config)
        except:
            raise ConfigurationError(_('Could not include config file (%s)') %
                                     filename)
        for key in self._properties:
            if key in config:
                self.set_property(key, config[key], True)

    def _load_main_config(self):
        if os.path.exists(DEFAULT_CONFIG_FILE):
            m.action(_('Loading default configuration from %s') %
                     DEFAULT_CONFIG_FILE)
            self._parse(DEFAULT_CONFIG_FILE)

    def _load_cmd_config(self, filenames):
        if filenames is not None:
            for f in filenames:
                if not os.path.exists(f):
                    raise ConfigurationError(_("Configuration file %s doesn't "
                                               "exist") % f)
                self._parse(f, reset=False)

    def _validate_properties(self):
        for name in ['seed', 'workers', 'eval_runs', 'isolation_k',
                     'toy_steps', 'toy_tasks', 'toy_answers',
                     'toy_switch_step', 'mixture_seed']:
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ConfigurationError(_('%s must be an integer') % name)
        for name in ['workers', 'eval_runs', 'isolation_k', 'toy_steps',
                     'toy_tasks', 'toy_answers']:
            if getattr(self, name) < 1:
                raise ConfigurationError(_('%s must be at least 1') % name)
        self.agent_config()
        self.grpo_config()
        self.toy_grpo_config()
        self.schedule()
        self.toy_schedule()
        self.mixture_spec()
        self._validate_backend('model_backend', BackendKind.all())
        self._validate_backend('baseline_backend', BackendKind.all())
        self._validate_backend('judge_backend', BackendKind.all())
        self._validate_backend('search_backend', SearchKind.all())

    def _validate_backend(self, name, kinds):
        settings = getattr(self, name)
        if settings is None:
            return
        if not isinstance(settings, dict):
            raise ConfigurationError(_('%s must be a dict') % name)
        kind = settings.get('kind')
        if kind not in kinds:
            raise ConfigurationError(_('%s.kind: unknown backend kind %r') %
                                     (name, kind))
        required = {BackendKind.SCRIPTED: 'script',
                    BackendKind.HTTP_CHAT: 'endpoint',
                    SearchKind.SIMULATED: 'corpus',
                    SearchKind.WEB: 'endpoint'}.get(kind)
        if required is not None and not settings.get(required):
            raise ConfigurationError(_('%s.%s is required') % (name, required))
        for key in ['script', 'corpus']:
            if key in settings and not os.path.exists(settings[key]):
                raise ConfigurationError(_("%s.%s: file %s doesn't exist") %
                                         (name, key, settings[key]))
