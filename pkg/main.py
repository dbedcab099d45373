import logging
import sys

from cli_report import main
from config import LOG_LEVEL

logging.basicConfig(level=LOG_LEVEL, format='%(asctime)s - %(levelname)s - %(message)s')

# Run with: python main.py verify --checks all --trials 1000 --seed 42
if __name__ == "__main__":
    sys.exit(main())
