"""Double graphs ``G x T_n``: construction, exact connectivity and claim verification."""

__version__ = "0.1.0"
