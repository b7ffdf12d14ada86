"""Terminal coloring for log lines."""

color2num = dict(
    gray=30,
    red=31,
    green=32,
    yellow=33,
    blue=34,
    magenta=35,
    cyan=36,
    white=37,
    crimson=38
)


def colorize(string, color, bold=False, highlight=False):
    """Return string surrounded by ANSI color codes. Valid colors: gray, red,
    green, yellow, blue, magenta, cyan, white, crimson. Unknown colors leave
    the string untouched.
    """
    if color not in color2num:
        return string
    num = color2num[color]
    if highlight:
        num += 10
    attrs = [str(num)]
    if bold:
        attrs.append('1')
    return '\x1b[%sm%s\x1b[0m' % (';'.join(attrs), string)
