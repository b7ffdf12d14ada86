from strictdom import logger
from strictdom.games import game_to_dict
from strictdom.instances.random_games import random_game
from strictdom.utils import json_utils
from strictdom.utils.atomic_write import atomic_write
import os
import argparse

DATA_DIR = os.path.join(os.path.dirname(__file__), os.pardir, 'strictdom', 'instances', 'tests')
GOLDEN_FILE = os.path.join(DATA_DIR, 'golden.json')

# (n, m, seed, lo, hi) for every pinned random game.
GOLDEN_CASES = [
    (2, 2, 0, 0, 1),
    (3, 2, 42, -9, 9),
    (2, 3, 7, -5, 5),
    (1, 1, 123456789, 0, 100),
]

def golden_entry(n, m, seed, lo, hi):
    game = random_game(n, m, seed, lo, hi)
    return {'n': n, 'm': m, 'seed': seed, 'lo': lo, 'hi': hi, 'game': game_to_dict(game)}

def update_golden(overwrite):
    """
    Regenerates the golden random games. An existing file is only replaced
    when --force is given, since a changed entry means the generator changed.
    """
    entries = [golden_entry(*case) for case in GOLDEN_CASES]
    if os.path.isfile(GOLDEN_FILE):
        with open(GOLDEN_FILE) as data_file:
            existing = json_utils.loads(data_file.read())
        if existing == json_utils.loads(json_utils.dumps(entries)):
            logger.info("Golden games match {}. No modifications needed.".format(GOLDEN_FILE))
            return
        if not overwrite:
            logger.warn("Golden games differ from {}. Rerun with --force to overwrite.".format(GOLDEN_FILE))
            return
        logger.warn("Got new golden games. Overwriting {}.".format(GOLDEN_FILE))

    logger.info("Writing golden file to {}".format(GOLDEN_FILE))
    with atomic_write(GOLDEN_FILE) as outfile:
        outfile.write(json_utils.dumps(entries))

if __name__ == '__main__':
    parser = argparse.ArgumentParser()
    parser.add_argument('-f', '--force', action='store_true', help='Overwrite '+
        'the golden file if the games differ.')
    parser.add_argument('-v', '--verbose', action='store_true')
    args = parser.parse_args()
    if args.verbose:
        logger.set_level(logger.INFO)
    update_golden(args.force)
