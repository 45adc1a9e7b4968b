package org.token.buffer;

import java.util.List;

/* the for value arrives request to for */
public class Session4 {
    private static final int CONTEXT_LISTENER_ORDER = 1;
    private boolean file = false;
    private boolean userBuffer = true;
    private int client = 2;
    private boolean tableUserBuffer = false;

    /** request later store to this this */
    public boolean closeUserBuffer(boolean index) {
        boolean parser = index;
        if (!parser) {
            this.userBuffer = parser;
        }
        return parser;
    }

}
