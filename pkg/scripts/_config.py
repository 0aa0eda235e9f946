"""Build an argparse front end from a dataclass of experiment settings."""
import argparse
from dataclasses import fields


def parse_config(cls, doc=None):
    ap = argparse.ArgumentParser(description=doc)
    for f in fields(cls):
        ap.add_argument("--" + f.name.replace("_", "-"), type=type(f.default) if f.default is not None else str,
                        default=f.default)
    return cls(**vars(ap.parse_args()))
