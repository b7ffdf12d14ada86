"""Worked example games."""
from strictdom.games.game import Game


def fig1():
    """3x2 game in which D is dominated by a mix of U and M but by neither alone."""
    return Game(['U', 'M', 'D'], ['L', 'R'],
                [[6, 0], [2, 5], [3, 3]],
                [[1, 3], [1, 0], [2, 1]], title='fig1')


def five_lines():
    """Player 1's expected payoffs are five lines in the belief q on b1:
    E1 = 1.2q + 0.4, E2 = -1.3q + 1.3, E3 = 0.5q + 0.8, E4 = -0.8q + 1 and
    E5 = 0.8. Column b1 holds each line at q = 1, column b2 at q = 0.
    """
    return Game(['a1', 'a2', 'a3', 'a4', 'a5'], ['b1', 'b2'],
                [['8/5', '2/5'], [0, '13/10'], ['13/10', '4/5'], ['1/5', 1], ['4/5', '4/5']],
                [[0, 0]] * 5, title='five-lines')


def vec3x2():
    """(2,2) is beaten by the half-half mix of (1,5) and (5,1), not by either one."""
    return Game(['a1', 'a2', 'a3'], ['b1', 'b2'],
                [[1, 5], [5, 1], [2, 2]],
                [[0, 0]] * 3, title='vec3x2')


def prisoners_dilemma():
    return Game(['C', 'D'], ['C', 'D'],
                [[3, 0], [5, 1]],
                [[3, 5], [0, 1]], title='prisoners-dilemma')
