"""echoforge: ray-traced sound propagation with SH-domain reverberation."""

__version__ = "0.1.0"
