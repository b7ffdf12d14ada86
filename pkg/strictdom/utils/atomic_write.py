import os
import tempfile
from contextlib import contextmanager


@contextmanager
def atomic_write(filepath, binary=False, fsync=False):
    """Open a temporary file next to `filepath` and move it into place once
    the block exits without error, so a half-written report never replaces a
    complete one. Text is written as UTF-8 with '\\n' line endings whatever
    the platform, keeping report bytes reproducible.

    :param filepath: the file path to be written
    :param binary: open in binary mode instead of text mode
    :param fsync: force the data to disk before the rename
    """
    directory = os.path.dirname(os.path.abspath(filepath))
    fd, tmppath = tempfile.mkstemp(prefix='.' + os.path.basename(filepath), suffix='.tmp', dir=directory)
    try:
        if binary:
            file = os.fdopen(fd, 'wb')
        else:
            file = os.fdopen(fd, 'w', encoding='utf-8', newline='\n')
        with file:
            yield file
            if fsync:
                file.flush()
                os.fsync(file.fileno())
        os.replace(tmppath, filepath)
    finally:
        if os.path.exists(tmppath):
            os.remove(tmppath)
