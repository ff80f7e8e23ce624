# Load .env file using:
from dotenv import load_dotenv
load_dotenv()
import os

ENV = os.getenv("PYTHON_ENV") or "development"
LOG_DIR = os.getenv("HECKE_LOG_DIR") or "logs"
CACHE_DIR = os.getenv("HECKE_CACHE_DIR") or ".hecke-cache"
DEFAULT_TOL = float(os.getenv("HECKE_TOL") or 1e-8)
DEFAULT_THREADS = int(os.getenv("HECKE_THREADS") or 1)
