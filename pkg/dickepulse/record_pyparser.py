##########################################################################################
# dickepulse/record_pyparser.py
##########################################################################################
"""Function to generate a PyParsing grammar for dickepulse text documents

A document is a sequence of assignments in the style of a SPICE text kernel:
    FORMAT          = 'SCHEDULE'
    N_DOTS          = 4
    W_OVER_G        = 1.0000000000000000e+02
    PULSES          = ( ( 0 -3.0 0.785 1.57 0.39 )
                        ( 1 -1.0 1.570 0.00 0.78 ) )
Values are integers, reals (exponents may use e, E, d or D), single-quoted strings, or
parenthesized arrays of values, which may nest. A '#' starts a comment that runs to the end
of the line.
"""
##########################################################################################

from pyparsing import (
    Combine,
    Forward,
    Group,
    Literal,
    OneOrMore,
    Optional,
    ParserElement,
    QuotedString,
    StringEnd,
    Suppress,
    White,
    Word,
    ZeroOrMore,
    alphanums,
    alphas,
    nums,
    one_of,
    rest_of_line,
)

##########################################################################################
# Begin grammar
##########################################################################################

# All whitespace is handled explicitly
ParserElement.set_default_whitespace_chars('')

# Useful definitions...
comment   = Suppress(Literal('#') + rest_of_line)
filler    = Suppress(ZeroOrMore(White(' \t\r\n') | comment))
blank     = Suppress(ZeroOrMore(White(' \t')))
equals    = Suppress(Literal('='))

##########################################################################################
# Numbers
##########################################################################################

opt_sign = Optional(one_of(['+', '-']))
mantissa = (Word(nums) + Optional(Literal('.') + Optional(Word(nums))) |
            Literal('.') + Word(nums))
exponent = one_of(['e', 'E', 'd', 'D']) + opt_sign + Word(nums)

int_value = Combine(opt_sign + Word(nums) + ~one_of(['.', 'e', 'E', 'd', 'D']))
int_value.set_parse_action(lambda s,l,t: int(t[0]))

float_value = Combine(opt_sign + mantissa + Optional(exponent))
float_value.set_parse_action(lambda s,l,t: float(t[0].lower().replace('d', 'e')))

# Note: int_value must appear before float_value; it refuses anything with a fraction
number = int_value | float_value

##########################################################################################
# Values and assignments
##########################################################################################

string = QuotedString("'", esc_quote="''")

value = Forward()
array = Group(Suppress(Literal('(')) + ZeroOrMore(filler + value) + filler
              + Suppress(Literal(')')))
value <<= array | string | number

name = Word(alphas + '_', alphanums + '_')

assignment = Group(name + blank + equals + filler + value)

##########################################################################################

def record_pyparser():
    """A parser for a complete dickepulse text document.

    The pyparser interprets a string and returns a pyparsing.ParseResults object. Calling
    the as_list() method on this object returns a list of [name, value] pairs in document
    order, where each value is an int, a float, a str, or a (possibly nested) list of such
    values.
    """

    return filler + ZeroOrMore(assignment + filler) + StringEnd()

##########################################################################################
