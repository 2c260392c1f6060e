##########################################################################################
# tests/test_record_pyparser.py
##########################################################################################

import unittest

from pyparsing import ParseException

from dickepulse.record_pyparser import record_pyparser


class Test_record_pyparser(unittest.TestCase):

    def runTest(self):

        parser = record_pyparser()

        # (text, expected list of [name, value] pairs)
        TESTS = [
            ('',                                [] ),
            ('A = 1',                           [['A', 1]] ),
            ('A=-2',                            [['A', -2]] ),
            ('A = +4',                          [['A', 4]] ),
            ('A = 3.',                          [['A', 3.]] ),
            ('A = .5',                          [['A', 0.5]] ),
            ('A = -2.5e3',                      [['A', -2500.]] ),
            ('A = 1e5',                         [['A', 1.e5]] ),
            ('A = 1.5D2',                       [['A', 150.]] ),
            ('A = 1.5d-2',                      [['A', 0.015]] ),
            ("A = 'TARGET'",                    [['A', 'TARGET']] ),
            ("A = 'it''s'",                     [['A', "it's"]] ),
            ("A = ''",                          [['A', '']] ),
            ('A = ( )',                         [['A', []]] ),
            ('A = ()',                          [['A', []]] ),
            ('A = (1 2.0 \'x\')',               [['A', [1, 2., 'x']]] ),
            ('A = ( 1 ( 2 3 ) ( ) )',           [['A', [1, [2, 3], []]]] ),
            ('N_DOTS = 4\nW_OVER_G = 1.0',      [['N_DOTS', 4], ['W_OVER_G', 1.]] ),
            ('A = (\n  ( 1 2 )\n  ( 3 4 )\n)',  [['A', [[1, 2], [3, 4]]]] ),
            ('A =\n  7',                        [['A', 7]] ),
            ('\n\n  A = 1  \n\n',               [['A', 1]] ),
            ('# header\nA = 1 # note\nB = 2',   [['A', 1], ['B', 2]] ),
            ('A = ( 1 # one\n 2 )',             [['A', [1, 2]]] ),
            ('# only a comment',                [] ),
        ]

        for (text, expected) in TESTS:
            result = parser.parse_string(text).as_list()
            self.assertEqual(result, expected, msg=repr(text))

        # Integers stay integers; anything with a fraction or exponent is a float
        result = parser.parse_string('A = (3 3. 3e0)').as_list()
        self.assertEqual([type(x) for x in result[0][1]], [int, float, float])

        FAILURES = [
            'A',
            'A = ',
            'A 1',
            '= 1',
            '1A = 2',
            'A = 1.2.3',
            'A = (1 2',
            'A = 1 2',
            "A = 'open",
            'A = "double"',
            'A = x',
        ]

        for text in FAILURES:
            self.assertRaises(ParseException, parser.parse_string, text)

##########################################################################################
