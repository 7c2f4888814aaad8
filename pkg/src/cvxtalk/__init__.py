"""Cross-talk compensation toolkit for continuous-variable entanglement distribution."""

__version__ = "0.1.0"
