import os
import pytest

DATA = os.path.join(os.path.dirname(__file__), 'data')

def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False,
                     help='run the long enumerations and the order-16 census')

def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip)

def catalog_path(order):
    if order == 16:
        return os.environ.get('GENUSPOLY_CUBIC16')
    return os.path.join(DATA, 'cubic%d.g6' % order)

def catalog_lines(order):
    with open(catalog_path(order)) as fh:
        return [line.strip() for line in fh if line.strip()]

@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """ no user configuration leaks into the tests """
    from genuspoly import config
    monkeypatch.setattr(config, 'cfg_fns', [str(tmp_path / 'genuspoly.cfg')])
