"""
The MIT License

Copyright (c) 2026 the genuspoly authors

Permission is hereby granted, free of charge, to any person obtaining
a copy of this software and associated documentation files (the
"Software"), to deal in the Software without restriction, including
without limitation the rights to use, copy, modify, merge, publish,
distribute, sublicense, and/or sell copies of the Software, and to
permit persons to whom the Software is furnished to do so, subject to
the following conditions:

The above copyright notice and this permission notice shall be
included in all copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS
BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN
ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN
CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.

"""

import configparser
import os
from .err import *

cfg_fns = [
    os.path.expanduser(os.getenv('GENUSPOLY_CFG',
                                 os.path.join(os.path.dirname(__file__), 'genuspoly.cfg'))),
    os.path.expanduser('~/.genuspoly.cfg')]

## built-in settings, every file in cfg_fns overrides these
defaults = {
    'enumeration': {
        'budget': str(2**26),
        'engine': 'numpy',
        'chunk': '16384',
        'workers': '0',             # 0 means os.cpu_count()
        'parallel_threshold': str(2**20),
    },
    'roots': {
        'tol': '1e-12',
        'max_sweeps': '1000',
        'real_threshold': '1e-9',
        'cone_boundary': '1e-9',
        'factor_tol': '1e-8',
    },
    'survey': {
        'format': 'csv',
        'window': '64',
        'checkpoint_every': '50',
    },
}

def read_config(fns=None):
    config = configparser.RawConfigParser()
    config.read_dict(defaults)
    config.read(cfg_fns if fns is None else fns)
    return config

def config_get(config, section, option):
    return config.get(section, option)

def config_int(config, section, option):
    try:
        return config.getint(section, option)
    except ValueError:
        raise InvalidInputError('%s.%s is not an integer: %s'
                                % (section, option, config.get(section, option)))

def config_float(config, section, option):
    try:
        return config.getfloat(section, option)
    except ValueError:
        raise InvalidInputError('%s.%s is not a number: %s'
                                % (section, option, config.get(section, option)))

def config_set(config, section, option, value):

    if section != 'DEFAULT' and not config.has_section(section):
        config.add_section(section)
    config.set(section, option, value)

def default_workers(config):

    w = config_int(config, 'enumeration', 'workers')
    if w <= 0:
        w = os.cpu_count() or 1
    return w

def enumeration_options(args, config):

    """ keyword arguments for genus_distribution, command line over config """

    workers = getattr(args, 'workers', None) or default_workers(config)
    if workers < 1:
        raise InvalidInputError('--workers must be at least 1, got %d' % workers)
    return dict(
        workers=workers,
        budget=getattr(args, 'budget', None) or config_int(config, 'enumeration', 'budget'),
        force=getattr(args, 'force_budget', False),
        engine=getattr(args, 'engine', None) or config_get(config, 'enumeration', 'engine'),
        chunk=config_int(config, 'enumeration', 'chunk'),
        parallel_threshold=config_int(config, 'enumeration', 'parallel_threshold'),
        quiet=getattr(args, 'quiet', True))

def root_options(args, config):

    tol = getattr(args, 'tol', None) or config_float(config, 'roots', 'tol')
    if tol <= 0:
        raise InvalidInputError('--tol must be positive, got %g' % tol)
    return dict(
        tol=tol,
        max_sweeps=config_int(config, 'roots', 'max_sweeps'),
        real_threshold=config_float(config, 'roots', 'real_threshold'),
        cone_tol=config_float(config, 'roots', 'cone_boundary'),
        factor_tol=config_float(config, 'roots', 'factor_tol'))

def print_current(config):

    print("Configuration files to search:")
    for cfg_fn in cfg_fns:
        print(' - %s%s' % (cfg_fn, '' if os.path.exists(cfg_fn) else ' (absent)'))
    print('')

    for section in config.sections():
        print('[%s]' % section)
        for op in config.options(section):
            print(' - %s: %s' % (op, config.get(section, op)))
        print('')

def main_config(args):

    config = read_config()

    if not (args.k and args.v):
        print_current(config)
        return

    if '.' not in args.k:
        err_die('key must look like section.option, got %s' % args.k, 2)
    section, option = args.k.split('.', 1)
    if section not in defaults or option not in defaults[section]:
        err_die('unknown setting %s' % args.k, 2)

    ## only persist what the user sets, not the built-in defaults
    saved = configparser.RawConfigParser()
    saved.read(cfg_fns)
    config_set(saved, section, option, args.v)
    for cfg_fn in cfg_fns:
        try:
            with open(cfg_fn, 'w') as fh:
                saved.write(fh)
            err_print('wrote %s.%s=%s to %s' % (section, option, args.v, cfg_fn))
            return
        except IOError:
            pass
    err_die('no writable configuration file among %s' % ', '.join(cfg_fns), 2)
