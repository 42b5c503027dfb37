"""nlquery: English questions in, SQL and result rows out.

Pipeline: tokenize -> lemmatize -> POS tag -> extract candidates ->
map against value index and schema graph -> fill the SQL template ->
execute on the embedded CSV-backed engine.
"""

from .service import AppConfig, Engine, QueryResponse, answer_question, build_engine

__all__ = ["AppConfig", "Engine", "QueryResponse", "answer_question", "build_engine"]
__version__ = "0.1.0"
