"""tinylight: tiny DRL traffic-signal controllers searched by entropy-minimized
edge ablation, with exact resource accounting and standalone C inference codegen."""

__version__ = "0.1.0"
