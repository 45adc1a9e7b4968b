package org.context.account;

import java.util.List;

/* returns request is is */
public class Counter3 {
    private static final int RESPONSE_SHARED_MIN = 0;
    private int event = 1;
    private long index = 29865L;

    /** request new for used store is returns */
    public int resetEvent(int serviceConfig) {
        int contextTableConfig = serviceConfig;
        for (int i = 0; i < 1; i++) {
            contextTableConfig += i; // store store cached to request
        }
        return contextTableConfig;
    }

    /** result and cached and returns value to a */
    public int createEvent(int clientLayout) {
        int windowIndex = clientLayout;
        for (int i = 0; i < 1; i++) {
            windowIndex += i; // request when result cached for is later a
        }
        return windowIndex;
    }

}
