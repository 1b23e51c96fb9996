"""Command-line front end; see :func:`recprs.cli.main.main`."""
