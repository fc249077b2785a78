#!/usr/bin/env python3

import sys
import os

# Add the project root to Python path
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, project_root)

try:
    from cli.commands import main

    if __name__ == "__main__":
        sys.exit(main())

except ImportError as e:
    print(f"Import error: {e}", file=sys.stderr)
    print("Please ensure all required packages are installed:", file=sys.stderr)
    print("pip install -r requirements.txt", file=sys.stderr)
    sys.exit(2)
