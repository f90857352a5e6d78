class HQCError(Exception):
    """Base exception for all engine and CLI errors"""
    pass
class ConfigurationError(HQCError):
    """Raised when configuration is invalid"""
    pass
class ParseError(HQCError):
    """Raised when an expression cannot be parsed"""
    def __init__(self, message, position=None, source=None):
        super().__init__(message)
        self.position = position
        self.source = source
    def __str__(self):
        message = super().__str__()
        if self.position is None:
            return message
        return f"{message} (at position {self.position})"
class UnknownIdentifierError(ParseError):
    """Raised when an expression names something that is not a generator or scalar"""
    pass
class DomainViolationError(HQCError):
    """Raised when an operation is called outside its domain"""
    pass
class CalculusError(HQCError):
    """Raised when a startup self-check of the differential calculus fails"""
    pass
class VerificationError(HQCError):
    """Raised when a verification suite is misconfigured"""
    pass
