"""Batch interface: job files, the analysis pipeline and report rendering."""
from .jobs import ANALYSES, JobParseError, JobSpec, parse_job
from .pipeline import SCHEMA, report_body, run
