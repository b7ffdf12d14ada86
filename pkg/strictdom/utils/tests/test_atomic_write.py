import os

import pytest

from strictdom.utils.atomic_write import atomic_write


def test_atomic_write_replaces(tmp_path):
    path = str(tmp_path / 'report.json')
    with open(path, 'w') as f:
        f.write('old')
    with atomic_write(path) as f:
        f.write('new')
    with open(path) as f:
        assert f.read() == 'new'
    assert os.listdir(str(tmp_path)) == ['report.json']


def test_atomic_write_keeps_old_file_on_error(tmp_path):
    path = str(tmp_path / 'report.json')
    with open(path, 'w') as f:
        f.write('old')
    with pytest.raises(RuntimeError):
        with atomic_write(path) as f:
            f.write('half')
            raise RuntimeError('boom')
    with open(path) as f:
        assert f.read() == 'old'
    assert os.listdir(str(tmp_path)) == ['report.json']
