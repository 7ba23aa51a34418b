"""Labor-statistics ingestion pipeline, catalog store, and REST service.

The package is organized around the stages of a monthly data pipeline:

- ``catalog``      domain vocabulary: surveys, measures, geographies, units
- ``title_parser`` structured metadata recovered from free-text series titles
- ``ingestion``    batched, year-windowed fetches from the public API (or a
                   local fixture server) with an auditable ingest log
- ``wrangling``    normalization, gap filling, and derived series
- ``store``        persistent SQLite-backed home for all of the above
- ``api``          REST surface powering the dashboards
- ``cli``          operator entry point (ingest / serve / export / status)
"""

__version__ = "0.1.0"
