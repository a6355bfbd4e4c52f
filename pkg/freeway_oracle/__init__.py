"""
Freeway oracle: a deterministic Freeway simulator, an A-Star crossing oracle and the experiment harnesses built on
them.
"""
