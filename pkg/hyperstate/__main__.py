from hyperstate.cli import main

raise SystemExit(main())
