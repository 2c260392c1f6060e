##########################################################################################
# dickepulse/_exceptions.py
##########################################################################################
"""Definition of dickepulse-specific exceptions
"""
##########################################################################################

class DickeDomainError(ValueError):
    pass

class DickeParseException(ValueError):
    pass

class DickeResourceError(MemoryError):
    pass

class DickeInvariantFailure(ArithmeticError):
    pass

##########################################################################################
