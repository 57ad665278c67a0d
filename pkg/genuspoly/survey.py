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

Batch survey of a graph6 catalog of cubic graphs.

Records come out in catalog order whatever the worker count. With an
output file the run keeps a checkpoint next to it, so an interrupted
survey can resume and still produce a byte-identical report.

"""

from collections import deque
from concurrent.futures import ProcessPoolExecutor
import hashlib
import os
import sys
import time
from tqdm import tqdm
from .err import *
from .graph6 import parse_graph6, list_parse_graph6
from .embedding import genus_distribution
from .polynomial import is_log_concave, is_real_rooted
from .roots import find_roots, cone_classify, real_factorization, CONE_VIOLATION
from .record import SurveyRecord, SurveySummary, OrderCounts, print_header, emit_report, FORMATS
from .config import read_config, config_int, config_float, config_get, default_workers

class SurveyOptions():

    def __init__(self, workers=1, engine='numpy', chunk=16384, tol=1e-12,
                 budget=None, force=False, strict=False, window=64, fmt='csv',
                 timings=False, quiet=True, checkpoint_every=50, stop_after=None):

        self.workers = workers
        self.engine = engine
        self.chunk = chunk
        self.tol = tol
        self.budget = budget
        self.force = force
        self.strict = strict
        self.window = window
        self.fmt = fmt
        self.timings = timings
        self.quiet = quiet
        self.checkpoint_every = checkpoint_every
        self.stop_after = stop_after   # records to write before stopping early

def survey_one(line, engine='numpy', chunk=16384, tol=1e-12, budget=None, force=False):

    """ genus polynomial and its verdicts for one graph6 line """

    t0 = time.time()
    g = parse_graph6(line)
    dist = genus_distribution(g, workers=1, budget=budget, force=force, engine=engine, chunk=chunk)
    p = dist.polynomial()
    lc, _ = is_log_concave(p)
    real = is_real_rooted(p)

    cone = False
    non_lc = False
    if not real:
        roots = find_roots(p, tol)
        cone = any(cone_classify(r) == CONE_VIOLATION for r in roots)
        non_lc = len(real_factorization(p, roots).non_log_concave()) > 0

    return SurveyRecord(line, g.n, dist, lc, real, cone, non_lc, int(round((time.time() - t0) * 1000)))

def list_survey_jobs(lines, strict=False, skip=0):

    """ yield (lineno, graph6) for the cubic graphs after line `skip` """

    for lineno, line, g in list_parse_graph6(lines):
        if lineno <= skip:
            continue
        if isinstance(g, Exception):
            if strict:
                raise InvalidInputError('line %d: %s' % (lineno, g))
            err_warn('line %d skipped: %s' % (lineno, g))
            continue
        if not g.is_regular(3):
            if strict:
                raise InvalidInputError('line %d: graph with degrees %s is not cubic'
                                        % (lineno, sorted(set(g.degrees()))))
            err_warn('line %d skipped: not cubic' % lineno)
            continue
        yield lineno, line

def iter_survey(jobs, options):

    """ yield (lineno, SurveyRecord) in job order """

    args = (options.engine, options.chunk, options.tol, options.budget, options.force)
    if options.workers <= 1:
        for lineno, line in jobs:
            yield lineno, survey_one(line, *args)
        return

    window = deque()
    with ProcessPoolExecutor(max_workers=options.workers) as executor:
        for lineno, line in jobs:
            window.append((lineno, executor.submit(survey_one, line, *args)))
            if len(window) >= options.window:
                lineno, fut = window.popleft()
                yield lineno, fut.result()
        while window:
            lineno, fut = window.popleft()
            yield lineno, fut.result()

def run_survey(lines, options):

    """ survey in memory, returns (SurveySummary, [SurveyRecord]) """

    summary = SurveySummary()
    records = []
    for _, r in iter_survey(list_survey_jobs(lines, options.strict), options):
        summary.add(r)
        records.append(r)
    return summary, records

def file_sha256(fn):

    h = hashlib.sha256()
    with open(fn, 'rb') as fh:
        for block in iter(lambda: fh.read(1 << 20), b''):
            h.update(block)
    return h.hexdigest()

class Checkpoint():

    """ plain-text progress record of a survey run """

    magic = 'genuspoly-checkpoint 1'

    def __init__(self, sha256, fmt, timings=False):
        self.sha256 = sha256
        self.fmt = fmt
        self.timings = timings
        self.lines_done = 0
        self.report_bytes = 0
        self.complete = False
        self.summary = SurveySummary()

    def dumps(self):
        lines = [self.magic,
                 'sha256 %s' % self.sha256,
                 'format %s' % self.fmt,
                 'timings %d' % int(self.timings),
                 'lines_done %d' % self.lines_done,
                 'report_bytes %d' % self.report_bytes,
                 'complete %d' % int(self.complete)]
        for n in self.summary:
            lines.append('order %d %d %d %d %d' % ((n,) + self.summary[n].as_tuple()))
        return '\n'.join(lines) + '\n'

    def save(self, fn):
        tmp = fn + '.tmp'
        with open(tmp, 'w') as fh:
            fh.write(self.dumps())
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, fn)

    @classmethod
    def load(cls, fn):

        try:
            with open(fn) as fh:
                lines = fh.read().splitlines()
        except IOError as e:
            raise CheckpointMismatchError('cannot read checkpoint %s: %s' % (fn, e))
        if not lines or lines[0] != cls.magic:
            raise CheckpointMismatchError('%s is not a genuspoly checkpoint' % fn)

        fields = {}
        orders = []
        for line in lines[1:]:
            key, _, value = line.partition(' ')
            if key == 'order':
                orders.append([int(v) for v in value.split()])
            else:
                fields[key] = value
        try:
            ck = cls(fields['sha256'], fields['format'], fields['timings'] == '1')
            ck.lines_done = int(fields['lines_done'])
            ck.report_bytes = int(fields['report_bytes'])
            ck.complete = fields['complete'] == '1'
            for n, total, non_real, cone, non_lc in orders:
                ck.summary.orders[n] = OrderCounts(total, non_real, cone, non_lc)
        except (KeyError, ValueError) as e:
            raise CheckpointMismatchError('checkpoint %s is damaged: %s' % (fn, e))
        return ck

def survey_catalog(catalog, out, options, checkpoint=None, resume=False):

    """ survey a catalog file into the report `out`, returns the SurveySummary """

    if options.fmt not in FORMATS:
        raise InvalidInputError('unknown report format %s, choose from %s' % (options.fmt, ', '.join(FORMATS)))
    try:
        sha = file_sha256(catalog)
    except IOError as e:
        raise InvalidInputError('cannot read catalog %s: %s' % (catalog, e))
    if checkpoint is None:
        checkpoint = out + '.ckpt'

    if resume and os.path.exists(checkpoint):
        ck = Checkpoint.load(checkpoint)
        if ck.sha256 != sha:
            raise CheckpointMismatchError('catalog %s changed since the checkpoint was written' % catalog)
        if ck.fmt != options.fmt or ck.timings != options.timings:
            raise CheckpointMismatchError('checkpoint was written for format %s, asked for %s'
                                          % (ck.fmt, options.fmt))
        if ck.complete:
            err_print('survey of %s already complete' % catalog)
            return ck.summary
        try:
            size = os.path.getsize(out)
        except OSError:
            raise CheckpointMismatchError('report %s is missing' % out)
        if size < ck.report_bytes:
            raise CheckpointMismatchError('report %s is shorter (%d bytes) than the checkpoint records (%d)'
                                          % (out, size, ck.report_bytes))
        fh = open(out, 'r+b')
        fh.truncate(ck.report_bytes)
        fh.seek(ck.report_bytes)
        err_print('resuming %s after line %d' % (catalog, ck.lines_done))
    else:
        ck = Checkpoint(sha, options.fmt, options.timings)
        try:
            fh = open(out, 'wb')
        except IOError as e:
            raise InvalidInputError('cannot write report %s: %s' % (out, e))
        fh.write(print_header(options.fmt, options.timings).encode())

    try:
        with open(catalog) as cat:
            nlines = sum(1 for line in cat if line.strip())
        with open(catalog) as cat, tqdm(total=nlines, initial=ck.summary.total, unit='graph',
                                        disable=options.quiet) as bar:
            jobs = list_survey_jobs(cat, options.strict, ck.lines_done)
            written = 0
            for lineno, r in iter_survey(jobs, options):
                fh.write(r.formats(options.fmt, options.timings).encode())
                ck.summary.add(r)
                ck.lines_done = lineno
                written += 1
                bar.update(1)
                if written % options.checkpoint_every == 0 or written == options.stop_after:
                    fh.flush()
                    ck.report_bytes = fh.tell()
                    ck.save(checkpoint)
                if written == options.stop_after:
                    return ck.summary

        fh.flush()
        ck.report_bytes = fh.tell()
        with open(catalog) as cat:
            ck.lines_done = sum(1 for _ in cat)
        ck.complete = True
        ck.save(checkpoint)
    finally:
        fh.close()

    return ck.summary

def main_survey(args):

    config = read_config()
    options = SurveyOptions(
        workers=args.workers if args.workers else default_workers(config),
        engine=args.engine or config_get(config, 'enumeration', 'engine'),
        chunk=config_int(config, 'enumeration', 'chunk'),
        tol=args.tol if args.tol else config_float(config, 'roots', 'tol'),
        budget=args.budget if args.budget else config_int(config, 'enumeration', 'budget'),
        force=args.force_budget,
        strict=args.strict,
        window=config_int(config, 'survey', 'window'),
        fmt=args.format or config_get(config, 'survey', 'format'),
        timings=args.timings,
        quiet=args.quiet,
        checkpoint_every=config_int(config, 'survey', 'checkpoint_every'))

    if args.o:
        summary = survey_catalog(args.catalog, args.o, options, args.checkpoint, args.resume)
    else:
        if args.resume or args.checkpoint:
            raise InvalidInputError('--resume and --checkpoint need a report file (-o)')
        try:
            cat = open(args.catalog)
        except IOError as e:
            raise InvalidInputError('cannot read catalog %s: %s' % (args.catalog, e))
        with cat:
            summary, records = run_survey(cat, options)
        emit_report(records, options.fmt, sys.stdout, options.timings)

    print(summary.format())
