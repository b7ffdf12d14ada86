"""The Game JSON format.

    {"title": optional string,
     "row_actions": [string...], "col_actions": [string...],
     "row_payoffs": [[numeral...]...], "col_payoffs": [[numeral...]...]}

A numeral is an integer, a decimal string ("1.2") or a ratio string ("6/5").
JSON decimals (1.2 unquoted) are read exactly too. Output always uses "p/q".
"""

from strictdom import error
from strictdom.games.game import Game
from strictdom.utils import json_utils
from strictdom.utils.numerals import format_rational

REQUIRED_KEYS = ('row_actions', 'col_actions', 'row_payoffs', 'col_payoffs')


def game_from_dict(data):
    if not isinstance(data, dict):
        raise error.InvalidGame('A game must be a JSON object, not {}'.format(type(data).__name__))
    missing = [k for k in REQUIRED_KEYS if k not in data]
    if missing:
        raise error.InvalidGame('Game is missing keys: {}'.format(missing))
    unknown = sorted(set(data) - set(REQUIRED_KEYS) - {'title'})
    if unknown:
        raise error.InvalidGame('Unknown game keys: {}'.format(unknown))
    for key in ('row_actions', 'col_actions'):
        if not isinstance(data[key], list) or not all(isinstance(a, str) for a in data[key]):
            raise error.InvalidGame('{} must be a list of strings'.format(key))
    for key in ('row_payoffs', 'col_payoffs'):
        if not isinstance(data[key], list) or not all(isinstance(r, list) for r in data[key]):
            raise error.InvalidGame('{} must be a list of lists'.format(key))
    title = data.get('title')
    if title is not None and not isinstance(title, str):
        raise error.InvalidGame('title must be a string')
    return Game(data['row_actions'], data['col_actions'], data['row_payoffs'], data['col_payoffs'], title)


def game_to_dict(game):
    data = {
        'row_actions': list(game.row_actions),
        'col_actions': list(game.col_actions),
        'row_payoffs': [[format_rational(v) for v in row] for row in game.row_payoffs],
        'col_payoffs': [[format_rational(v) for v in row] for row in game.col_payoffs],
    }
    if game.title is not None:
        data['title'] = game.title
    return data


def parse_game(text):
    """Parse Game JSON (bytes or str) exactly."""
    try:
        data = json_utils.loads(text)
    except (ValueError, UnicodeDecodeError) as e:
        raise error.InvalidGame('Malformed game JSON: {}'.format(e))
    return game_from_dict(data)


def serialize_game(game):
    """Canonical Game JSON as UTF-8 bytes."""
    return json_utils.dumps(game_to_dict(game)).encode('utf-8')
