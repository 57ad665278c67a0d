import io
import json
import os
import pytest

from genuspoly.err import InvalidInputError, CheckpointMismatchError
from genuspoly.survey import (SurveyOptions, run_survey, survey_catalog, survey_one,
                              Checkpoint, file_sha256)
from genuspoly.record import SurveySummary, emit_report
from genuspoly.graph6 import write_graph6
from genuspoly.catalog import generalized_petersen
from conftest import catalog_path, catalog_lines

def test_k4_record_csv():
    r = survey_one('C~')
    buf = io.StringIO()
    emit_report([r], 'csv', buf)
    assert buf.getvalue() == ('graph6,n,coefficients,log_concave,real_rooted,cone_violation,non_lc_quadratic\n'
                              'C~,4,2;14,true,true,false,false\n')

def test_k4_record_json():
    r = survey_one('C~')
    buf = io.StringIO()
    emit_report([r], 'json', buf)
    d = json.loads(buf.getvalue())
    assert d == {'graph6': 'C~', 'n': 4, 'coefficients': ['2', '14'], 'log_concave': True,
                 'real_rooted': True, 'cone_violation': False, 'non_lc_quadratic': False}

def test_timings_column():
    r = survey_one('C~')
    assert r.format_csv(timings=True).count(',') == 7
    assert 'compute_millis' in r.format_json(timings=True)
    assert 'compute_millis' not in r.format_json()

def test_gp_8_2_flags():
    r = survey_one(write_graph6(generalized_petersen(8, 2)))
    assert r.n == 16
    assert r.distribution == (2, 84, 2074, 23536, 39840)
    assert r.log_concave
    assert not r.real_rooted
    assert r.cone_violation
    assert r.non_lc_quadratic

def test_census_order_10():
    summary, records = run_survey(catalog_lines(10), SurveyOptions())
    assert summary[10].as_tuple()[:2] == (19, 2)
    assert [r.graph6 for r in records] == catalog_lines(10)
    for r in records:
        if not r.real_rooted:
            assert r.log_concave

def test_census_order_12():
    summary, _ = run_survey(catalog_lines(12), SurveyOptions(workers=2, window=8))
    assert (summary[12].non_real, summary[12].total) == (5, 85)
    assert summary[12].non_log_concave == 0

def test_census_order_14():
    summary, _ = run_survey(catalog_lines(14), SurveyOptions(workers=2))
    assert (summary[14].non_real, summary[14].total) == (41, 509)
    assert summary[14].cone_violation <= summary[14].non_real

@pytest.mark.slow
def test_census_order_16():
    if not catalog_path(16):
        pytest.skip('GENUSPOLY_CUBIC16 not set')
    summary, _ = run_survey(catalog_lines(16), SurveyOptions(workers=os.cpu_count() or 1))
    assert (summary[16].non_real, summary[16].total) == (178, 4060)

def test_workers_keep_order():
    lines = catalog_lines(10)
    _, serial = run_survey(lines, SurveyOptions(workers=1))
    _, parallel = run_survey(lines, SurveyOptions(workers=3, window=2))
    assert [r.format_csv() for r in parallel] == [r.format_csv() for r in serial]

def test_skip_and_strict():
    lines = ['C~', '', 'C?', 'zz', 'D~{', 'C~']
    summary, records = run_survey(lines, SurveyOptions())
    assert len(records) == 2
    assert summary[4].total == 2
    with pytest.raises(InvalidInputError) as e:
        run_survey(lines, SurveyOptions(strict=True))
    assert 'line 3' in str(e.value)

def test_non_cubic_strict():
    with pytest.raises(InvalidInputError) as e:
        run_survey(['C~', 'D~{'], SurveyOptions(strict=True))
    assert 'line 2' in str(e.value)

def test_summary_format():
    summary, _ = run_survey(catalog_lines(8) + catalog_lines(10), SurveyOptions())
    lines = summary.format().splitlines()
    assert lines[0] == '8: 0 / 5'
    assert lines[1] == '10: 2 / 19'
    assert lines[2].startswith('cone_violations\t')
    assert lines[3] == 'non_log_concave\t0'

def test_summary_warns_on_lc_failure():
    class R():
        n = 4
        real_rooted = True
        cone_violation = False
        log_concave = False
    s = SurveySummary()
    s.add(R())
    assert s.format().splitlines()[-1].startswith('WARNING\t1 ')

def _full_report(tmp_path, fmt='csv'):
    out = str(tmp_path / ('full.' + fmt))
    survey_catalog(catalog_path(10), out, SurveyOptions(fmt=fmt, checkpoint_every=4))
    with open(out, 'rb') as fh:
        return fh.read()

@pytest.mark.parametrize('fmt', ['csv', 'json'])
def test_resume_is_byte_identical(tmp_path, fmt):
    full = _full_report(tmp_path, fmt)
    out = str(tmp_path / ('part.' + fmt))
    opts = SurveyOptions(fmt=fmt, checkpoint_every=3, stop_after=7)
    survey_catalog(catalog_path(10), out, opts)

    ## a crash after the checkpoint leaves extra bytes behind
    with open(out, 'ab') as fh:
        fh.write(b'half a line')
    ck = Checkpoint.load(out + '.ckpt')
    assert not ck.complete
    assert ck.summary.total == 7

    summary = survey_catalog(catalog_path(10), out, SurveyOptions(fmt=fmt, checkpoint_every=3), resume=True)
    assert summary[10].total == 19
    assert summary[10].non_real == 2
    with open(out, 'rb') as fh:
        assert fh.read() == full

def test_resume_completed_is_noop(tmp_path):
    out = str(tmp_path / 'r.csv')
    survey_catalog(catalog_path(8), out, SurveyOptions())
    before = open(out, 'rb').read()
    summary = survey_catalog(catalog_path(8), out, SurveyOptions(), resume=True)
    assert summary[8].total == 5
    assert open(out, 'rb').read() == before

def test_checkpoint_contents(tmp_path):
    out = str(tmp_path / 'r.csv')
    survey_catalog(catalog_path(8), out, SurveyOptions())
    ck = Checkpoint.load(out + '.ckpt')
    assert ck.complete
    assert ck.sha256 == file_sha256(catalog_path(8))
    assert ck.lines_done == 5
    assert ck.report_bytes == os.path.getsize(out)
    assert ck.summary[8].total == 5

def test_resume_with_changed_catalog(tmp_path):
    cat = tmp_path / 'cat.g6'
    cat.write_text('\n'.join(catalog_lines(8)) + '\n')
    out = str(tmp_path / 'r.csv')
    survey_catalog(str(cat), out, SurveyOptions(stop_after=2))
    cat.write_text('\n'.join(catalog_lines(8)[::-1]) + '\n')
    with pytest.raises(CheckpointMismatchError):
        survey_catalog(str(cat), out, SurveyOptions(), resume=True)

def test_resume_with_other_format(tmp_path):
    out = str(tmp_path / 'r.out')
    survey_catalog(catalog_path(8), out, SurveyOptions(stop_after=2))
    with pytest.raises(CheckpointMismatchError):
        survey_catalog(catalog_path(8), out, SurveyOptions(fmt='json'), resume=True)

def test_damaged_checkpoint(tmp_path):
    ck = tmp_path / 'bad.ckpt'
    ck.write_text('something else\n')
    with pytest.raises(CheckpointMismatchError):
        Checkpoint.load(str(ck))

def test_missing_catalog(tmp_path):
    with pytest.raises(InvalidInputError):
        survey_catalog(str(tmp_path / 'nope.g6'), str(tmp_path / 'r.csv'), SurveyOptions())
