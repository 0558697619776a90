"""
Errors
    Every error raised by the toolkit derives from LuneError so the command line
    can turn it into an exit code in one place.
"""

class LuneError(Exception):
    exit_code = 1

# ==========
# Groups
# ==========
class GeometryError(LuneError):
    pass

class BodyError(LuneError):
    pass

class EngineError(LuneError):
    pass

class UsageError(LuneError):
    exit_code = 2

class DocumentError(LuneError):
    exit_code = 3

# ==========
# Geometry
# ==========
class AntipodalEndpoints(GeometryError):
    pass

class DegenerateTriple(GeometryError):
    pass

class DegenerateLune(GeometryError):
    pass

class NotInOpenHemisphere(GeometryError):
    pass

class DegenerateInput(GeometryError):
    pass

class NotOnBoundary(GeometryError):
    pass

# ==========
# Bodies (bad constructor parameters are usage errors on the command line)
# ==========
class BadRadius(BodyError):
    exit_code = 2

class BadThickness(BodyError):
    exit_code = 2

class BadParameters(BodyError):
    exit_code = 2

class NoSolution(BodyError):
    pass

class EmptyResult(BodyError):
    pass

# ==========
# Width engine / covering
# ==========
class NotSupporting(EngineError):
    pass

class DiameterMismatch(EngineError):
    pass

class ThicknessTooLarge(EngineError):
    pass

class NotConstantWidthOverHalfPi(EngineError):
    pass

class RegimeUnknown(EngineError):
    pass

# ==========
# Command line / documents
# ==========
class UnknownTheoremId(UsageError):
    pass

class ConfigError(UsageError):
    pass

class SchemaError(DocumentError):
    pass
