"""Capacity measures of finite margin multi-category classifiers."""
