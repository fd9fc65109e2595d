"""Gate-tunable graphene THz hypersurface absorber toolkit."""

__version__ = "0.1.0"
