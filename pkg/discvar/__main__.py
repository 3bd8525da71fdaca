from discvar.main import main

raise SystemExit(main())
